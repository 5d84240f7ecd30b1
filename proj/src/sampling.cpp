#include "lca/sampling.hpp"

#include "lca/decomposition.hpp"
#include "lca/error.hpp"

#include <algorithm>

namespace lca {

namespace {

std::int64_t uniform(std::mt19937_64 &rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

void overwrite(Matrix<HomScalar> &e, const std::vector<std::size_t> &idx,
               const HomMatrix &block) {
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      e(idx[i], idx[j]) = block(i, j);
}

struct Strata {
  std::vector<std::size_t> free, toral, finite, real;
};

// Strata as indices into the original group.
Strata strata_of(const GroupExpr &group) {
  Strata s;
  for (std::size_t i = 0; i < group.size(); ++i) {
    switch (group[i].kind()) {
    case BlockKind::IntegerLine: s.free.push_back(i); break;
    case BlockKind::Circle: s.toral.push_back(i); break;
    case BlockKind::Cyclic: s.finite.push_back(i); break;
    case BlockKind::RealLine: s.real.push_back(i); break;
    }
  }
  return s;
}

} // namespace

GroupExpr random_group(std::mt19937_64 &rng, std::size_t max_blocks,
                       std::int64_t max_modulus) {
  const auto n = uniform(rng, 1, static_cast<std::int64_t>(std::max<std::size_t>(max_blocks, 1)));
  std::vector<Block> blocks;
  for (std::int64_t i = 0; i < n; ++i) {
    switch (uniform(rng, 0, 3)) {
    case 0: blocks.push_back(Block::real()); break;
    case 1: blocks.push_back(Block::integers()); break;
    case 2: blocks.push_back(Block::circle()); break;
    default: blocks.push_back(Block::cyclic(uniform(rng, 1, std::max<std::int64_t>(max_modulus, 1))));
    }
  }
  return GroupExpr(std::move(blocks));
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64 &rng, std::int64_t bound) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 0)
    return m;
  const auto last = static_cast<std::int64_t>(n) - 1;
  for (std::size_t step = 0; step < 4 * n + 2; ++step) {
    IntMatrix next = m;
    const auto i = static_cast<std::size_t>(uniform(rng, 0, last));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, last));
    switch (uniform(rng, 0, 3)) {
    case 0:
    case 1: {
      if (i == j)
        break;
      auto c = uniform(rng, -2, 1);
      if (c >= 0)
        ++c;
      for (std::size_t k = 0; k < n; ++k)
        next(i, k) += Integer(static_cast<long>(c)) * next(j, k);
      break;
    }
    case 2: next.swap_rows(i, j); break;
    default:
      for (std::size_t k = 0; k < n; ++k)
        next(i, k) = -next(i, k);
    }
    bool within = true;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        within = within && abs(next(r, c)) <= bound;
    if (within)
      m = std::move(next);
  }
  return m;
}

RatMatrix random_nonsingular(std::size_t n, std::mt19937_64 &rng, std::int64_t bound) {
  GroupExpr reals(std::vector<Block>(n, Block::real()));
  for (;;) {
    auto m = real_part_matrix(random_hom(reals, reals, rng, std::max<std::int64_t>(bound, 1)));
    if (rational_determinant(m) != 0)
      return m;
  }
}

HomMatrix random_finite_automorphism(const GroupExpr &finite, std::mt19937_64 &rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto e = random_hom(finite, finite, rng, 1);
    if (finite_automorphism_test(e))
      return e;
  }
  return HomMatrix::identity(finite);
}

HomMatrix random_endomorphism_biased(const GroupExpr &group, std::mt19937_64 &rng,
                                     std::int64_t bound, double p_invertible) {
  const auto base = random_hom(group, group, rng, bound);
  Matrix<HomScalar> e = base.entries();
  const auto s = strata_of(group);
  std::bernoulli_distribution coin(p_invertible);

  if (coin(rng)) {
    const auto g = group.select(s.free);
    overwrite(e, s.free, from_integer_matrix(random_unimodular(s.free.size(), rng, bound), g));
  }
  if (coin(rng)) {
    const auto g = group.select(s.toral);
    overwrite(e, s.toral, from_integer_matrix(random_unimodular(s.toral.size(), rng, bound), g));
  }
  if (coin(rng))
    overwrite(e, s.finite, random_finite_automorphism(group.select(s.finite), rng));
  if (coin(rng)) {
    const auto g = group.select(s.real);
    overwrite(e, s.real, from_real_matrix(random_nonsingular(s.real.size(), rng, bound), g));
  }
  return {group, group, std::move(e)};
}

HomMatrix random_automorphism(const GroupExpr &group, std::mt19937_64 &rng,
                              std::int64_t bound) {
  return random_endomorphism_biased(group, rng, bound, 1.0);
}

HomMatrix random_square_zero(const GroupExpr &group, std::mt19937_64 &rng,
                             std::int64_t bound) {
  const auto cert = canonical_decomposition(group);
  const bool has_split = cert.euclidean_rank > 0 && !cert.l1.empty();
  if (has_split && std::bernoulli_distribution(0.5)(rng)) {
    const auto reals = GroupExpr(std::vector<Block>(cert.euclidean_rank, Block::real()));
    const auto gamma = random_hom(cert.l1, reals, rng, bound);
    const auto beta = random_hom(reals, cert.l1, rng, bound);
    const auto n = block_matrix(beta * gamma, HomMatrix::zero(reals, cert.l1),
                                HomMatrix::zero(cert.l1, reals),
                                HomMatrix::zero(reals, reals));
    return unconjugate_by_permutation(n, cert);
  }
  // Map the "source" blocks into the "target" blocks and kill the targets.
  std::vector<bool> source(group.size());
  for (std::size_t i = 0; i < group.size(); ++i)
    source[i] = std::bernoulli_distribution(0.5)(rng);
  const auto r = random_hom(group, group, rng, bound);
  Matrix<HomScalar> e(group.size(), group.size());
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j)
      e(i, j) = (source[j] && !source[i]) ? r(i, j) : HomScalar::zero(group[j], group[i]);
  return {group, group, std::move(e)};
}

} // namespace lca
