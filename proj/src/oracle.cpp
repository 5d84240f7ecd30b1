#include "lca/oracle.hpp"

#include "lca/error.hpp"

#include <numeric>

namespace lca {

namespace {

Integer abs_value(const Integer &z) { return z < 0 ? Integer(-z) : z; }

// Row op on both A and U: row_i -= q * row_t.
void row_axpy(IntMatrix &a, IntMatrix &u, std::size_t i, std::size_t t,
              const Integer &q) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    a(i, j) -= q * a(t, j);
  for (std::size_t j = 0; j < u.cols(); ++j)
    u(i, j) -= q * u(t, j);
}

// Column op on both A and V: col_j -= q * col_t.
void col_axpy(IntMatrix &a, IntMatrix &v, std::size_t j, std::size_t t,
              const Integer &q) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    a(i, j) -= q * a(i, t);
  for (std::size_t i = 0; i < v.rows(); ++i)
    v(i, j) -= q * v(i, t);
}

Integer tdiv(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    d.push_back(s(i, i));
  return d;
}

SNFResult smith_normal_form(const IntMatrix &m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      // Pivot: least nonzero absolute value in the trailing submatrix.
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 &&
              (!pivot || abs_value(a(i, j)) < abs_value(a(pivot->first, pivot->second))))
            pivot = {i, j};
      if (!pivot)
        break;
      a.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      a.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i)
        if (a(i, t) != 0) {
          row_axpy(a, u, i, t, tdiv(a(i, t), a(t, t)));
          clean = clean && a(i, t) == 0;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (a(t, j) != 0) {
          col_axpy(a, v, j, t, tdiv(a(t, j), a(t, t)));
          clean = clean && a(t, j) == 0;
        }
      if (!clean)
        continue; // a smaller remainder exists; re-pivot

      // Divisibility: fold any offending row into row t and retry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < r && !offending; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (mod(a(i, j), abs_value(a(t, t))) != 0) {
            offending = i;
            break;
          }
      if (!offending)
        break;
      row_axpy(a, u, t, *offending, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j)
        a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < u.cols(); ++j)
        u(t, j) = -u(t, j);
    }
  }
  return {std::move(a), std::move(u), std::move(v)};
}

Integer integer_determinant(const IntMatrix &m) {
  if (!m.square())
    throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0)
        ++swap;
      if (swap == n)
        return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational rational_determinant(const RatMatrix &m) {
  if (!m.square())
    throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0)
        continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j)
        a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RatMatrix rational_inverse(const RatMatrix &m) {
  if (!m.square())
    throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0)
      ++p;
    if (p == n)
      throw Error(ErrorKind::NotAutomorphism, "singular rational matrix");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0)
        continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix &m) {
  const Integer det = integer_determinant(m);
  if (det != 1 && det != -1)
    throw Error(ErrorKind::NotAutomorphism,
                "integer matrix with determinant " + det.get_str());
  const std::size_t n = m.rows();
  IntMatrix adj(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(j, i) = (-1)^{i+j} det(minor without row i, column j)
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i)
          continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j)
            continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const Integer cof = integer_determinant(minor);
      adj(j, i) = (i + j) % 2 ? Integer(-cof) : cof;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj(i, j) *= det; // 1/det == det for det = +-1
  return adj;
}

GroupExpr finite_group(std::span<const std::int64_t> moduli) {
  std::vector<Block> blocks;
  for (auto n : moduli)
    blocks.push_back(Block::cyclic(n));
  return GroupExpr(std::move(blocks));
}

std::optional<std::uint64_t> group_order(std::span<const std::int64_t> moduli) {
  std::uint64_t order = 1;
  for (auto n : moduli) {
    if (n < 1 || __builtin_mul_overflow(order, static_cast<std::uint64_t>(n), &order))
      return std::nullopt;
  }
  return order;
}

Integer endomorphism_count(std::span<const std::int64_t> moduli) {
  Integer count = 1;
  for (auto a : moduli)
    for (auto b : moduli)
      count *= static_cast<long>(std::gcd(a, b));
  return count;
}

EndomorphismStream::EndomorphismStream(std::vector<std::int64_t> moduli,
                                       OracleCaps caps)
    : group_(finite_group(moduli)) {
  const auto order = group_order(moduli);
  if (!order || *order > caps.enumeration)
    throw Error(ErrorKind::CapExceeded,
                "|F| exceeds the enumeration cap " + std::to_string(caps.enumeration));
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = 0; j < moduli.size(); ++j) {
      const auto d = hom_descriptor(group_[j], group_[i]);
      orders_.push_back(d.kind == HomKind::Residue ? d.order : 1);
    }
  reset();
}

void EndomorphismStream::reset() {
  counter_.assign(orders_.size(), 0);
  done_ = false;
}

std::optional<HomMatrix> EndomorphismStream::next() {
  if (done_)
    return std::nullopt;
  const std::size_t k = group_.size();
  Matrix<HomScalar> e(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      e(i, j) = HomScalar(group_[j], group_[i],
                          Rational(static_cast<long>(counter_[i * k + j])));
  HomMatrix out(group_, group_, std::move(e));

  std::size_t pos = 0;
  while (pos < counter_.size() && ++counter_[pos] == orders_[pos])
    counter_[pos++] = 0;
  done_ = pos == counter_.size();
  return out;
}

bool brute_force_is_auto(const HomMatrix &e, OracleCaps caps) {
  const auto &g = e.domain();
  if (!e.is_endomorphism())
    throw Error(ErrorKind::ShapeMismatch, "not an endomorphism");
  std::vector<std::int64_t> n;
  for (const auto &b : g) {
    if (!b.is_cyclic())
      throw Error(ErrorKind::ShapeMismatch, "brute force needs a finite group");
    n.push_back(b.modulus());
  }
  const auto order = group_order(n);
  if (!order || *order > caps.evaluation)
    throw Error(ErrorKind::CapExceeded,
                "|F| exceeds the evaluation cap " + std::to_string(caps.evaluation));
  const std::size_t k = n.size();

  // Image of generator j in coordinate i straight from the residue encoding.
  std::vector<std::int64_t> lift(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto &s = e(i, j);
      if (s.kind() != HomKind::Residue)
        continue;
      const std::int64_t a = s.value().get_num().get_si();
      const std::int64_t gij = std::gcd(n[i], n[j]);
      lift[i * k + j] = (a * (n[i] / gij)) % n[i];
    }

  std::vector<bool> seen(*order, false);
  std::vector<std::int64_t> x(k, 0);
  for (std::uint64_t count = 0; count < *order; ++count) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t y = 0;
      for (std::size_t j = 0; j < k; ++j)
        y = (y + lift[i * k + j] * x[j]) % n[i];
      index = index * static_cast<std::uint64_t>(n[i]) + static_cast<std::uint64_t>(y);
    }
    if (seen[index])
      return false;
    seen[index] = true;
    for (std::size_t p = k; p-- > 0;) {
      if (++x[p] < n[p])
        break;
      x[p] = 0;
    }
  }
  return true;
}

} // namespace lca
