#pragma once

// Automorphisms of elementary LCA groups through the split L = L1 (+) R^n,
// where L1 collects the Z, T and Z/n blocks.

#include "lca/category.hpp"
#include "lca/group.hpp"
#include "lca/oracle.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace lca {

/// Witness of L = L1 (+) R^n. permutation[k] is the index in `original` of
/// the block that lands at position k of l1 ++ R^n.
struct DecompositionCertificate {
  GroupExpr original;
  GroupExpr l1;
  std::size_t euclidean_rank = 0;
  std::vector<std::size_t> permutation;

  GroupExpr split_group() const;
};

/// Stable partition: non-R blocks keep their relative order in l1, R blocks
/// follow.
DecompositionCertificate canonical_decomposition(const GroupExpr &group);

/// P M P^-1 where P reorders `original` into l1 ++ R^n.
HomMatrix conjugate_by_permutation(const HomMatrix &m,
                                   const DecompositionCertificate &cert);
HomMatrix unconjugate_by_permutation(const HomMatrix &m,
                                     const DecompositionCertificate &cert);

/// Index partition of an L1 into Z blocks, T blocks and finite blocks.
struct L1Stratification {
  std::vector<std::size_t> free;
  std::vector<std::size_t> toral;
  std::vector<std::size_t> finite;
  std::vector<std::int64_t> moduli;
};

/// Throws ContainsRealBlock if the group has an R block.
L1Stratification stratify(const GroupExpr &l1);

enum class AutFailure { None, RealPart, IntegerPart, CirclePart, FinitePart };

struct AutomorphismVerdict {
  AutFailure failure = AutFailure::None;
  /// Determinant of the failing diagonal block (R, Z or T part).
  Rational determinant;

  bool automorphism() const noexcept { return failure == AutFailure::None; }
  explicit operator bool() const noexcept { return automorphism(); }
  /// e.g. "Z-part determinant 2", "finite part kernel nontrivial".
  std::string reason() const;
};

/// Kernel test for endomorphisms of a finite sum of cyclic groups: lifts E to
/// the integer matrix A of multipliers and checks that the Smith form of
/// [A | diag(n_i)] is [I | 0], i.e. A Z^k + diag(n) Z^k = Z^k.
/// Throws ShapeMismatch unless E is an endomorphism of a finite group.
bool finite_automorphism_test(const HomMatrix &e);

/// Solves E Y = 1 column by column through the same Smith form.
/// Throws NotAutomorphism.
HomMatrix finite_inverse(const HomMatrix &e);

AutomorphismVerdict l1_verdict(const HomMatrix &alpha);
/// GL(Z) on the Z part, GL(Z) on the T degrees, automorphism of the finite
/// part. Throws ContainsRealBlock.
bool aut_l1(const HomMatrix &alpha);
/// Triangular recursion over (Z^a; T^b; F). Throws NotAutomorphism.
HomMatrix inverse_l1(const HomMatrix &alpha);

/// Throws DomainMismatch unless m is an endomorphism.
AutomorphismVerdict automorphism_verdict(const HomMatrix &m);
bool is_automorphism(const HomMatrix &m);
/// Exact two-sided inverse. Throws NotAutomorphism.
HomMatrix inverse(const HomMatrix &m);

/// alpha - beta delta^-1 gamma over L1, in l1 block order.
/// Throws DeltaNotInvertible.
HomMatrix quasi_determinant_lca(const HomMatrix &m);

/// Rational matrix of an all-Real morphism (e.g. an endomorphism of R^n).
RatMatrix real_part_matrix(const HomMatrix &m);
/// Integer matrix of an all-Integer morphism (Z^a or T^b diagonal blocks).
IntMatrix integer_part_matrix(const HomMatrix &m);
HomMatrix from_real_matrix(const RatMatrix &m, const GroupExpr &group);
HomMatrix from_integer_matrix(const IntMatrix &m, const GroupExpr &group);

/// Category instance over elementary LCA groups.
struct LcaCategory {
  using Object = GroupExpr;
  using Morphism = HomMatrix;

  bool in_hom(const HomMatrix &f, const GroupExpr &a, const GroupExpr &b) const {
    return f.domain() == a && f.codomain() == b;
  }
  HomMatrix compose(const HomMatrix &g, const HomMatrix &f) const { return g * f; }
  HomMatrix add(const HomMatrix &f, const HomMatrix &g) const { return f + g; }
  HomMatrix negate(const HomMatrix &f) const { return -f; }
  HomMatrix zero(const GroupExpr &a, const GroupExpr &b) const {
    return HomMatrix::zero(a, b);
  }
  HomMatrix identity(const GroupExpr &a) const { return HomMatrix::identity(a); }
  bool equal(const HomMatrix &f, const HomMatrix &g) const { return f == g; }
  bool is_zero(const HomMatrix &f) const { return f.is_zero(); }
  bool is_automorphism(const GroupExpr &a, const HomMatrix &f) const {
    return in_hom(f, a, a) && lca::is_automorphism(f);
  }
  HomMatrix invert(const GroupExpr &a, const HomMatrix &f) const {
    if (!in_hom(f, a, a))
      throw Error(ErrorKind::DomainMismatch, "not an endomorphism of the object");
    return lca::inverse(f);
  }
};

static_assert(AdditiveCategory<LcaCategory>);

using LcaBlock2 = Block2Endo<LcaCategory>;

/// Splits an endomorphism of B (+) C, |B| = b_blocks, into block form.
LcaBlock2 split_block2(const HomMatrix &m, std::size_t b_blocks);
HomMatrix join_block2(const LcaBlock2 &phi);

/// The block form over l1 (+) R^n together with its certificate.
struct CanonicalBlocks {
  DecompositionCertificate certificate;
  LcaBlock2 phi;
};
CanonicalBlocks canonical_blocks(const HomMatrix &m);

/// Structural zeros for the ordering (K; R^n; Z^m), K the compact blocks.
struct ZeroPatternReport {
  struct Assertion {
    std::string slot; // e.g. "Hom(K, R^n)"
    bool zero = false;
  };

  GroupExpr compact;
  GroupExpr euclidean;
  GroupExpr discrete;
  /// zero_slot[i][j]: every hom group from stratum j to stratum i is zero.
  std::array<std::array<bool, 3>, 3> zero_slot{};
  /// Lower-triangle slots between non-empty strata.
  std::vector<Assertion> assertions;

  bool upper_triangular() const;
};

ZeroPatternReport triangular_corollary_shapes(const GroupExpr &group);

/// Aut(K) x GL_n(R) x GL_m(Z) test on the diagonal of the (K; R^n; Z^m) form.
bool is_automorphism_triangular(const HomMatrix &m);

} // namespace lca
