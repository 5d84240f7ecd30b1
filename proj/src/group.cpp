#include "lca/group.hpp"

#include "lca/error.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lca {

Block Block::cyclic(std::int64_t n) {
  if (n < 1)
    throw Error(ErrorKind::ValueError,
                "cyclic modulus must be >= 1, got " + std::to_string(n));
  return Block(BlockKind::Cyclic, n);
}

std::string Block::to_string() const {
  switch (kind_) {
  case BlockKind::RealLine: return "R";
  case BlockKind::IntegerLine: return "Z";
  case BlockKind::Circle: return "T";
  case BlockKind::Cyclic: return "Z/" + std::to_string(modulus_);
  }
  return "?";
}

GroupExpr GroupExpr::select(std::span<const std::size_t> indices) const {
  std::vector<Block> out;
  out.reserve(indices.size());
  for (auto i : indices)
    out.push_back(blocks_.at(i));
  return GroupExpr(std::move(out));
}

std::size_t GroupExpr::count(BlockKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      blocks_.begin(), blocks_.end(),
      [kind](const Block &b) { return b.kind() == kind; }));
}

std::string GroupExpr::to_string() const {
  if (blocks_.empty())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i)
      out += " + ";
    out += blocks_[i].to_string();
  }
  return out;
}

GroupExpr direct_sum(const GroupExpr &a, const GroupExpr &b) {
  std::vector<Block> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return GroupExpr(std::move(out));
}

std::string HomDescriptor::to_string() const {
  switch (kind) {
  case HomKind::Zero: return "0";
  case HomKind::Real: return "R";
  case HomKind::Integer: return "Z";
  case HomKind::CircleValue: return "T";
  case HomKind::Residue: return "Z/" + std::to_string(order);
  }
  return "?";
}

HomDescriptor hom_descriptor(const Block &src, const Block &dst) {
  if (src.is_trivial() || dst.is_trivial())
    return {};
  switch (src.kind()) {
  case BlockKind::RealLine:
    if (dst.is_real() || dst.is_circle())
      return {HomKind::Real, 0};
    return {};
  case BlockKind::IntegerLine:
    switch (dst.kind()) {
    case BlockKind::RealLine: return {HomKind::Real, 0};
    case BlockKind::IntegerLine: return {HomKind::Integer, 0};
    case BlockKind::Circle: return {HomKind::CircleValue, 0};
    case BlockKind::Cyclic: return {HomKind::Residue, dst.modulus()};
    }
    return {};
  case BlockKind::Circle:
    if (dst.is_circle())
      return {HomKind::Integer, 0};
    return {};
  case BlockKind::Cyclic:
    if (dst.is_circle())
      return {HomKind::Residue, src.modulus()};
    if (dst.is_cyclic()) {
      const auto g = std::gcd(src.modulus(), dst.modulus());
      if (g == 1)
        return {};
      return {HomKind::Residue, g};
    }
    return {};
  }
  return {};
}

namespace {

Integer require_integral(const Rational &v, const char *what) {
  if (!is_integral(v))
    throw Error(ErrorKind::ValueError,
                std::string(what) + " must be an integer, got " + to_string(v));
  return v.get_num();
}

} // namespace

HomScalar::HomScalar(Block src, Block dst, Rational value)
    : src_(src), dst_(dst) {
  const auto desc = hom_descriptor(src, dst);
  switch (desc.kind) {
  case HomKind::Zero:
    if (value != 0)
      throw Error(ErrorKind::ValueError, "Hom(" + src.to_string() + ", " +
                                             dst.to_string() + ") is zero");
    value_ = 0;
    break;
  case HomKind::Real:
    value_ = std::move(value);
    break;
  case HomKind::Integer:
    value_ = require_integral(value, "integer hom value");
    break;
  case HomKind::CircleValue:
    value_ = frac(value);
    break;
  case HomKind::Residue:
    value_ = mod(require_integral(value, "residue"), Integer(desc.order));
    break;
  }
}

HomScalar HomScalar::from_multiplier(Block src, Block dst, const Rational &m) {
  const auto desc = hom_descriptor(src, dst);
  if (desc.kind != HomKind::Residue)
    return {src, dst, desc.kind == HomKind::Zero ? Rational(0) : m};
  if (src.is_integer())
    return {src, dst, m};
  if (dst.is_circle()) {
    // Z/n -> T: 1 |-> m mod 1, which must be a multiple of 1/n.
    const Rational scaled = m * Rational(src.modulus());
    return {src, dst, Rational(require_integral(scaled, "n * multiplier"))};
  }
  // Z/n -> Z/k: image of 1 is m mod k, a multiple of k/g.
  const Integer k(dst.modulus());
  const Integer step = k / Integer(desc.order);
  const Integer image = mod(require_integral(m, "cyclic multiplier"), k);
  if (mod(image, step) != 0)
    throw Error(ErrorKind::ValueError,
                "multiplier does not define a map Z/" +
                    std::to_string(src.modulus()) + " -> Z/" +
                    std::to_string(dst.modulus()));
  return {src, dst, Rational(Integer(image / step))};
}

Rational HomScalar::multiplier() const {
  const auto desc = hom_descriptor(src_, dst_);
  if (desc.kind != HomKind::Residue || src_.is_integer())
    return value_;
  if (dst_.is_circle())
    return value_ / Rational(src_.modulus());
  return value_ * Rational(dst_.modulus() / desc.order);
}

Rational canonical_coordinate(const Block &b, const Rational &x) {
  switch (b.kind()) {
  case BlockKind::RealLine: return x;
  case BlockKind::IntegerLine:
    return Rational(require_integral(x, "Z coordinate"));
  case BlockKind::Circle: return frac(x);
  case BlockKind::Cyclic:
    return Rational(mod(require_integral(x, "Z/n coordinate"),
                        Integer(b.modulus())));
  }
  return x;
}

Rational HomScalar::apply(const Rational &x) const {
  return canonical_coordinate(dst_, multiplier() * x);
}

HomScalar scalar_compose(const HomScalar &f, const HomScalar &g) {
  if (!(f.dst() == g.src()))
    throw Error(ErrorKind::TagMismatch,
                "cannot compose " + f.src().to_string() + " -> " +
                    f.dst().to_string() + " with " + g.src().to_string() +
                    " -> " + g.dst().to_string());
  if (f.is_zero() || g.is_zero())
    return HomScalar::zero(f.src(), g.dst());
  return HomScalar::from_multiplier(f.src(), g.dst(),
                                    f.multiplier() * g.multiplier());
}

HomScalar scalar_add(const HomScalar &f, const HomScalar &g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
    throw Error(ErrorKind::TagMismatch, "adding scalars of different hom groups");
  return HomScalar::from_multiplier(f.src(), f.dst(),
                                    f.multiplier() + g.multiplier());
}

HomScalar scalar_negate(const HomScalar &f) {
  return HomScalar::from_multiplier(f.src(), f.dst(), -f.multiplier());
}

std::string to_string(const HomScalar &s) {
  const auto desc = s.descriptor();
  switch (desc.kind) {
  case HomKind::Zero: return "0";
  case HomKind::Real:
  case HomKind::Integer: return to_string(s.value());
  case HomKind::CircleValue: return to_string(s.value()) + " mod 1";
  case HomKind::Residue:
    return to_string(s.value()) + " mod " + std::to_string(desc.order);
  }
  return "?";
}

HomMatrix::HomMatrix(GroupExpr domain, GroupExpr codomain,
                     Matrix<HomScalar> entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      entries_(std::move(entries)) {
  if (entries_.rows() != codomain_.size() || entries_.cols() != domain_.size())
    throw Error(ErrorKind::ShapeMismatch, "matrix shape does not match groups");
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const auto &s = entries_(i, j);
      if (!(s.src() == domain_[j]) || !(s.dst() == codomain_[i]))
        throw Error(ErrorKind::TagMismatch,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not in Hom(" + domain_[j].to_string() + ", " +
                        codomain_[i].to_string() + ")");
    }
}

HomMatrix HomMatrix::zero(const GroupExpr &domain, const GroupExpr &codomain) {
  Matrix<HomScalar> e(codomain.size(), domain.size());
  for (std::size_t i = 0; i < codomain.size(); ++i)
    for (std::size_t j = 0; j < domain.size(); ++j)
      e(i, j) = HomScalar::zero(domain[j], codomain[i]);
  return {domain, codomain, std::move(e)};
}

HomMatrix HomMatrix::identity(const GroupExpr &group) {
  Matrix<HomScalar> e(group.size(), group.size());
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j)
      e(i, j) = i == j ? HomScalar::from_multiplier(group[j], group[i], 1)
                       : HomScalar::zero(group[j], group[i]);
  return {group, group, std::move(e)};
}

bool HomMatrix::is_zero() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!entries_(i, j).is_zero())
        return false;
  return true;
}

HomMatrix HomMatrix::select(std::span<const std::size_t> row_idx,
                            std::span<const std::size_t> col_idx) const {
  Matrix<HomScalar> e(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      e(i, j) = entries_(row_idx[i], col_idx[j]);
  return {domain_.select(col_idx), codomain_.select(row_idx), std::move(e)};
}

HomMatrix compose(const HomMatrix &m, const HomMatrix &n) {
  if (!(n.codomain() == m.domain()))
    throw Error(ErrorKind::DomainMismatch,
                "cannot compose: " + n.codomain().to_string() + " vs " +
                    m.domain().to_string());
  const auto &dom = n.domain();
  const auto &cod = m.codomain();
  Matrix<HomScalar> e(cod.size(), dom.size());
  for (std::size_t i = 0; i < cod.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      if (hom_descriptor(dom[j], cod[i]).kind == HomKind::Zero) {
        e(i, j) = HomScalar::zero(dom[j], cod[i]);
        continue;
      }
      Rational acc = 0;
      for (std::size_t k = 0; k < m.cols(); ++k) {
        const auto &a = m(i, k);
        const auto &b = n(k, j);
        if (a.is_zero() || b.is_zero())
          continue;
        // Each summand is re-encoded so reductions happen in Hom(dom_j, cod_i).
        acc += scalar_compose(b, a).multiplier();
      }
      e(i, j) = HomScalar::from_multiplier(dom[j], cod[i], acc);
    }
  return {dom, cod, std::move(e)};
}

HomMatrix add(const HomMatrix &m, const HomMatrix &n) {
  if (!(m.domain() == n.domain()) || !(m.codomain() == n.codomain()))
    throw Error(ErrorKind::DomainMismatch, "adding morphisms of different hom groups");
  Matrix<HomScalar> e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(i, j) = scalar_add(m(i, j), n(i, j));
  return {m.domain(), m.codomain(), std::move(e)};
}

HomMatrix negate(const HomMatrix &m) {
  Matrix<HomScalar> e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(i, j) = scalar_negate(m(i, j));
  return {m.domain(), m.codomain(), std::move(e)};
}

HomMatrix block_matrix(const HomMatrix &alpha, const HomMatrix &beta,
                       const HomMatrix &gamma, const HomMatrix &delta) {
  const auto &b = alpha.domain();
  const auto &c = delta.domain();
  if (!alpha.is_endomorphism() || !delta.is_endomorphism() ||
      !(beta.domain() == c) || !(beta.codomain() == b) ||
      !(gamma.domain() == b) || !(gamma.codomain() == c))
    throw Error(ErrorKind::DomainMismatch, "inconsistent 2x2 block shapes");
  const auto nb = b.size();
  const auto total = direct_sum(b, c);
  Matrix<HomScalar> e(total.size(), total.size());
  for (std::size_t i = 0; i < total.size(); ++i)
    for (std::size_t j = 0; j < total.size(); ++j) {
      const bool top = i < nb;
      const bool left = j < nb;
      const auto ii = top ? i : i - nb;
      const auto jj = left ? j : j - nb;
      e(i, j) = top ? (left ? alpha(ii, jj) : beta(ii, jj))
                    : (left ? gamma(ii, jj) : delta(ii, jj));
    }
  return {total, total, std::move(e)};
}

std::ostream &operator<<(std::ostream &os, const GroupExpr &g) {
  return os << g.to_string();
}

std::ostream &operator<<(std::ostream &os, const HomMatrix &m) {
  os << m.domain() << " -> " << m.codomain() << " [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? ", " : "") << to_string(m(i, j));
  }
  return os << "]";
}

GroupElement::GroupElement(GroupExpr group, std::vector<Rational> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.size())
    throw Error(ErrorKind::ShapeMismatch, "coordinate count != block count");
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = canonical_coordinate(group_[i], coords_[i]);
}

GroupElement GroupElement::zero(const GroupExpr &group) {
  return {group, std::vector<Rational>(group.size(), Rational(0))};
}

GroupElement operator+(const GroupElement &x, const GroupElement &y) {
  if (!(x.group() == y.group()))
    throw Error(ErrorKind::DomainMismatch, "adding elements of different groups");
  std::vector<Rational> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = x[i] + y[i];
  return {x.group(), std::move(c)};
}

GroupElement operator-(const GroupElement &x) {
  std::vector<Rational> c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = -x[i];
  return {x.group(), std::move(c)};
}

GroupElement evaluate(const HomMatrix &m, const GroupElement &x) {
  if (!(x.group() == m.domain()))
    throw Error(ErrorKind::DomainMismatch, "element is not in the domain");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] += m(i, j).apply(x[j]);
  return {m.codomain(), std::move(out)};
}

namespace {

std::int64_t uniform(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(std::mt19937_64 &rng, std::int64_t bound) {
  const auto num = uniform(rng, -bound, bound);
  const auto den = uniform(rng, 1, std::max<std::int64_t>(bound, 1));
  return make_rational(Integer(static_cast<long>(num)),
                       Integer(static_cast<long>(den)));
}

Rational random_unit_fraction(std::mt19937_64 &rng, std::int64_t bound) {
  const auto den = uniform(rng, 1, std::max<std::int64_t>(bound, 1));
  const auto num = uniform(rng, 0, den - 1);
  return make_rational(Integer(static_cast<long>(num)),
                       Integer(static_cast<long>(den)));
}

} // namespace

HomScalar random_scalar(const Block &src, const Block &dst, std::mt19937_64 &rng,
                        std::int64_t bound) {
  const auto desc = hom_descriptor(src, dst);
  switch (desc.kind) {
  case HomKind::Zero: return HomScalar::zero(src, dst);
  case HomKind::Real: return {src, dst, random_rational(rng, bound)};
  case HomKind::Integer:
    return {src, dst, Rational(static_cast<long>(uniform(rng, -bound, bound)))};
  case HomKind::CircleValue: return {src, dst, random_unit_fraction(rng, bound)};
  case HomKind::Residue:
    return {src, dst, Rational(static_cast<long>(uniform(rng, 0, desc.order - 1)))};
  }
  return HomScalar::zero(src, dst);
}

HomMatrix random_hom(const GroupExpr &domain, const GroupExpr &codomain,
                     std::mt19937_64 &rng, std::int64_t bound) {
  Matrix<HomScalar> e(codomain.size(), domain.size());
  for (std::size_t i = 0; i < codomain.size(); ++i)
    for (std::size_t j = 0; j < domain.size(); ++j)
      e(i, j) = random_scalar(domain[j], codomain[i], rng, bound);
  return {domain, codomain, std::move(e)};
}

HomMatrix random_hom(const GroupExpr &domain, const GroupExpr &codomain,
                     std::uint64_t seed, std::int64_t bound) {
  std::mt19937_64 rng(seed);
  return random_hom(domain, codomain, rng, bound);
}

GroupElement random_element(const GroupExpr &group, std::mt19937_64 &rng,
                            std::int64_t bound) {
  std::vector<Rational> c;
  c.reserve(group.size());
  for (const auto &b : group) {
    switch (b.kind()) {
    case BlockKind::RealLine: c.push_back(random_rational(rng, bound)); break;
    case BlockKind::IntegerLine:
      c.emplace_back(static_cast<long>(uniform(rng, -bound, bound)));
      break;
    case BlockKind::Circle: c.push_back(random_unit_fraction(rng, bound)); break;
    case BlockKind::Cyclic:
      c.emplace_back(static_cast<long>(uniform(rng, 0, b.modulus() - 1)));
      break;
    }
  }
  return {group, std::move(c)};
}

} // namespace lca
