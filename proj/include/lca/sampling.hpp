#pragma once

// Seeded generators for property checks.

#include "lca/group.hpp"
#include "lca/oracle.hpp"

#include <cstdint>
#include <random>

namespace lca {

/// Random group of 1..max_blocks blocks, cyclic moduli in [1, max_modulus].
GroupExpr random_group(std::mt19937_64 &rng, std::size_t max_blocks,
                       std::int64_t max_modulus);

/// Product of random elementary operations; entries stay within `bound`.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64 &rng, std::int64_t bound);

/// Nonsingular rational matrix with entries bounded as in random_hom.
RatMatrix random_nonsingular(std::size_t n, std::mt19937_64 &rng, std::int64_t bound);

/// Rejection-samples an automorphism of a finite cyclic sum.
HomMatrix random_finite_automorphism(const GroupExpr &finite, std::mt19937_64 &rng);

/// Random endomorphism of `group` in which each diagonal stratum (Z part,
/// T degrees, finite part, R part) is independently drawn from its
/// automorphism group with probability `p_invertible`, uniformly otherwise.
HomMatrix random_endomorphism_biased(const GroupExpr &group, std::mt19937_64 &rng,
                                     std::int64_t bound, double p_invertible);

/// Random automorphism: every diagonal stratum invertible.
HomMatrix random_automorphism(const GroupExpr &group, std::mt19937_64 &rng,
                              std::int64_t bound);

/// Random n with n o n = 0. Alternates between a strictly block-triangular
/// map across a random split of the blocks and a product beta o gamma with
/// gamma: L1 -> R^n, beta: R^n -> L1.
HomMatrix random_square_zero(const GroupExpr &group, std::mt19937_64 &rng,
                             std::int64_t bound);

} // namespace lca
