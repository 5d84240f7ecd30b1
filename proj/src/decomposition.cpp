#include "lca/decomposition.hpp"

#include "lca/error.hpp"

#include <numeric>

namespace lca {

namespace {

std::vector<std::size_t> invert_permutation(const std::vector<std::size_t> &perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k)
    inv[perm[k]] = k;
  return inv;
}

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a,
                                const std::vector<std::size_t> &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require_endomorphism(const HomMatrix &m) {
  if (!m.is_endomorphism())
    throw Error(ErrorKind::DomainMismatch,
                "expected an endomorphism, got " + m.domain().to_string() +
                    " -> " + m.codomain().to_string());
}

// Integer lift of an endomorphism of a finite cyclic sum, stacked with
// diag(n_i): the k x 2k matrix [A | D].
IntMatrix stacked_lift(const HomMatrix &e) {
  require_endomorphism(e);
  const auto &g = e.domain();
  const std::size_t k = g.size();
  IntMatrix out(k, 2 * k, Integer(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (!g[i].is_cyclic())
      throw Error(ErrorKind::ShapeMismatch,
                  "finite part contains " + g[i].to_string());
    out(i, k + i) = static_cast<long>(g[i].modulus());
    for (std::size_t j = 0; j < k; ++j)
      out(i, j) = e(i, j).multiplier().get_num();
  }
  return out;
}

bool snf_is_unit(const SNFResult &snf) {
  for (const auto &d : snf.diagonal())
    if (d != 1)
      return false;
  return true;
}

} // namespace

GroupExpr DecompositionCertificate::split_group() const {
  return original.select(permutation);
}

DecompositionCertificate canonical_decomposition(const GroupExpr &group) {
  DecompositionCertificate cert;
  cert.original = group;
  std::vector<std::size_t> reals;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i].is_real())
      reals.push_back(i);
    else
      cert.permutation.push_back(i);
  }
  cert.l1 = group.select(cert.permutation);
  cert.euclidean_rank = reals.size();
  cert.permutation.insert(cert.permutation.end(), reals.begin(), reals.end());
  return cert;
}

HomMatrix conjugate_by_permutation(const HomMatrix &m,
                                   const DecompositionCertificate &cert) {
  require_endomorphism(m);
  if (!(m.domain() == cert.original))
    throw Error(ErrorKind::DomainMismatch, "morphism is not over the certificate's group");
  return m.select(cert.permutation, cert.permutation);
}

HomMatrix unconjugate_by_permutation(const HomMatrix &m,
                                     const DecompositionCertificate &cert) {
  require_endomorphism(m);
  if (!(m.domain() == cert.split_group()))
    throw Error(ErrorKind::DomainMismatch, "morphism is not over l1 + R^n");
  const auto inv = invert_permutation(cert.permutation);
  return m.select(inv, inv);
}

L1Stratification stratify(const GroupExpr &l1) {
  L1Stratification s;
  for (std::size_t i = 0; i < l1.size(); ++i) {
    switch (l1[i].kind()) {
    case BlockKind::RealLine:
      throw Error(ErrorKind::ContainsRealBlock, "L1 = " + l1.to_string());
    case BlockKind::IntegerLine: s.free.push_back(i); break;
    case BlockKind::Circle: s.toral.push_back(i); break;
    case BlockKind::Cyclic:
      s.finite.push_back(i);
      s.moduli.push_back(l1[i].modulus());
      break;
    }
  }
  return s;
}

std::string AutomorphismVerdict::reason() const {
  switch (failure) {
  case AutFailure::None: return "automorphism";
  case AutFailure::RealPart: return "R-part determinant " + to_string(determinant);
  case AutFailure::IntegerPart: return "Z-part determinant " + to_string(determinant);
  case AutFailure::CirclePart: return "T-part determinant " + to_string(determinant);
  case AutFailure::FinitePart: return "finite part kernel nontrivial";
  }
  return "?";
}

RatMatrix real_part_matrix(const HomMatrix &m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).kind() != HomKind::Real)
        throw Error(ErrorKind::TagMismatch, "expected a real entry");
      out(i, j) = m(i, j).value();
    }
  return out;
}

IntMatrix integer_part_matrix(const HomMatrix &m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).kind() != HomKind::Integer)
        throw Error(ErrorKind::TagMismatch, "expected an integer entry");
      out(i, j) = m(i, j).value().get_num();
    }
  return out;
}

HomMatrix from_real_matrix(const RatMatrix &m, const GroupExpr &group) {
  Matrix<HomScalar> e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(i, j) = HomScalar(group[j], group[i], m(i, j));
  return {group, group, std::move(e)};
}

HomMatrix from_integer_matrix(const IntMatrix &m, const GroupExpr &group) {
  Matrix<HomScalar> e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(i, j) = HomScalar(group[j], group[i], Rational(m(i, j)));
  return {group, group, std::move(e)};
}

bool finite_automorphism_test(const HomMatrix &e) {
  const IntMatrix stacked = stacked_lift(e);
  if (stacked.rows() == 0)
    return true;
  return snf_is_unit(smith_normal_form(stacked));
}

HomMatrix finite_inverse(const HomMatrix &e) {
  const IntMatrix stacked = stacked_lift(e);
  const std::size_t k = stacked.rows();
  const auto snf = smith_normal_form(stacked);
  if (!snf_is_unit(snf))
    throw Error(ErrorKind::NotAutomorphism, "finite part kernel nontrivial");
  // [A | D] w = e_j with w = V [U e_j; 0]; the top half of w is the image of
  // generator j under the inverse.
  const auto &g = e.domain();
  Matrix<HomScalar> out(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      Integer x = 0;
      for (std::size_t t = 0; t < k; ++t)
        x += snf.v(i, t) * snf.u(t, j);
      out(i, j) = HomScalar::from_multiplier(g[j], g[i], Rational(x));
    }
  return {g, g, std::move(out)};
}

AutomorphismVerdict l1_verdict(const HomMatrix &alpha) {
  require_endomorphism(alpha);
  const auto strata = stratify(alpha.domain());
  AutomorphismVerdict verdict;

  const auto z_det = integer_determinant(
      integer_part_matrix(alpha.select(strata.free, strata.free)));
  if (z_det != 1 && z_det != -1)
    return {AutFailure::IntegerPart, Rational(z_det)};

  const auto t_det = integer_determinant(
      integer_part_matrix(alpha.select(strata.toral, strata.toral)));
  if (t_det != 1 && t_det != -1)
    return {AutFailure::CirclePart, Rational(t_det)};

  if (!finite_automorphism_test(alpha.select(strata.finite, strata.finite)))
    return {AutFailure::FinitePart, Rational(0)};
  return verdict;
}

bool aut_l1(const HomMatrix &alpha) { return l1_verdict(alpha).automorphism(); }

HomMatrix inverse_l1(const HomMatrix &alpha) {
  require_endomorphism(alpha);
  const auto &group = alpha.domain();
  const auto strata = stratify(group);
  const auto order = concat(concat(strata.free, strata.toral), strata.finite);
  const auto p = alpha.select(order, order);
  const std::size_t a = strata.free.size();
  const std::size_t b = strata.toral.size();
  const std::size_t n = order.size();

  // Hom(T + F, Z) = 0: lower triangular [[A, 0], [X, D]] over Z^a (+) (T^b + F).
  const auto head = iota(0, a);
  const auto tail = iota(a, n);
  const auto big_a = p.select(head, head);
  const auto x = p.select(tail, head);
  const auto d = p.select(tail, tail);

  // Hom(T, F) = 0: upper triangular [[T, Y], [0, E]] inside D.
  const auto t_idx = iota(0, b);
  const auto f_idx = iota(b, n - a);
  const auto t = d.select(t_idx, t_idx);
  const auto y = d.select(t_idx, f_idx);
  const auto e = d.select(f_idx, f_idx);

  const auto a_inv =
      from_integer_matrix(unimodular_inverse(integer_part_matrix(big_a)), big_a.domain());
  const auto t_inv =
      from_integer_matrix(unimodular_inverse(integer_part_matrix(t)), t.domain());
  const auto e_inv = finite_inverse(e);

  const auto d_inv = block_matrix(t_inv, -(t_inv * y * e_inv),
                                  HomMatrix::zero(t.domain(), e.domain()), e_inv);
  const auto p_inv = block_matrix(a_inv, HomMatrix::zero(d.domain(), big_a.domain()),
                                  -(d_inv * x * a_inv), d_inv);
  const auto back = invert_permutation(order);
  return p_inv.select(back, back);
}

LcaBlock2 split_block2(const HomMatrix &m, std::size_t b_blocks) {
  require_endomorphism(m);
  const std::size_t n = m.rows();
  if (b_blocks > n)
    throw Error(ErrorKind::ShapeMismatch, "split point past the last block");
  const auto head = iota(0, b_blocks);
  const auto tail = iota(b_blocks, n);
  const auto &g = m.domain();
  return {g.select(head),        g.select(tail),        m.select(head, head),
          m.select(head, tail),  m.select(tail, head),  m.select(tail, tail)};
}

HomMatrix join_block2(const LcaBlock2 &phi) {
  return block_matrix(phi.alpha, phi.beta, phi.gamma, phi.delta);
}

CanonicalBlocks canonical_blocks(const HomMatrix &m) {
  require_endomorphism(m);
  auto cert = canonical_decomposition(m.domain());
  auto phi = split_block2(conjugate_by_permutation(m, cert), cert.l1.size());
  return {std::move(cert), std::move(phi)};
}

AutomorphismVerdict automorphism_verdict(const HomMatrix &m) {
  const auto [cert, phi] = canonical_blocks(m);
  const auto det = rational_determinant(real_part_matrix(phi.delta));
  if (det == 0)
    return {AutFailure::RealPart, det};
  return l1_verdict(phi.alpha);
}

bool is_automorphism(const HomMatrix &m) { return automorphism_verdict(m).automorphism(); }

HomMatrix inverse(const HomMatrix &m) {
  const auto verdict = automorphism_verdict(m);
  if (!verdict)
    throw Error(ErrorKind::NotAutomorphism, verdict.reason());
  const auto [cert, phi] = canonical_blocks(m);
  if (cert.euclidean_rank == 0)
    return inverse_l1(m);
  if (cert.l1.empty())
    return from_real_matrix(rational_inverse(real_part_matrix(m)), m.domain());
  const auto inv = inverse_2x2(phi, LcaCategory{});
  return unconjugate_by_permutation(join_block2(inv), cert);
}

HomMatrix quasi_determinant_lca(const HomMatrix &m) {
  return quasi_determinant(canonical_blocks(m).phi, LcaCategory{});
}

bool ZeroPatternReport::upper_triangular() const {
  return zero_slot[1][0] && zero_slot[2][0] && zero_slot[2][1];
}

ZeroPatternReport triangular_corollary_shapes(const GroupExpr &group) {
  std::array<std::vector<std::size_t>, 3> strata;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto &b = group[i];
    strata[b.is_compact() ? 0 : b.is_real() ? 1 : 2].push_back(i);
  }
  ZeroPatternReport report;
  report.compact = group.select(strata[0]);
  report.euclidean = group.select(strata[1]);
  report.discrete = group.select(strata[2]);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      bool zero = true;
      for (auto src : strata[j])
        for (auto dst : strata[i])
          zero = zero && hom_descriptor(group[src], group[dst]).kind == HomKind::Zero;
      report.zero_slot[i][j] = zero;
    }
  static constexpr const char *names[3] = {"K", "R^n", "Z^m"};
  for (auto [i, j] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}})
    if (!strata[i].empty() && !strata[j].empty())
      report.assertions.push_back(
          {std::string("Hom(") + names[j] + ", " + names[i] + ")",
           report.zero_slot[i][j]});
  return report;
}

bool is_automorphism_triangular(const HomMatrix &m) {
  require_endomorphism(m);
  const auto &group = m.domain();
  std::vector<std::size_t> k, r, z;
  for (std::size_t i = 0; i < group.size(); ++i)
    (group[i].is_compact() ? k : group[i].is_real() ? r : z).push_back(i);
  if (!aut_l1(m.select(k, k)))
    return false;
  if (rational_determinant(real_part_matrix(m.select(r, r))) == 0)
    return false;
  const auto det = integer_determinant(integer_part_matrix(m.select(z, z)));
  return det == 1 || det == -1;
}

} // namespace lca
