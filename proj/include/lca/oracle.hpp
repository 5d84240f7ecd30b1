#pragma once

// Exact linear algebra over Z and Q, and brute-force ground truth for finite
// abelian groups. The fast automorphism paths are checked against these.

#include "lca/group.hpp"
#include "lca/matrix.hpp"
#include "lca/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lca {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// U * M * V = S, S diagonal with d1 | d2 | ... and d_i >= 0; U, V unimodular.
struct SNFResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;

  std::vector<Integer> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix &m);

/// Fraction-free (Bareiss) elimination. Throws ShapeMismatch if not square.
Integer integer_determinant(const IntMatrix &m);
/// Gaussian elimination over Q. Throws ShapeMismatch if not square.
Rational rational_determinant(const RatMatrix &m);

/// Throws NotAutomorphism when m is singular.
RatMatrix rational_inverse(const RatMatrix &m);
/// Adjugate / determinant. Throws NotAutomorphism unless det(m) = +-1.
IntMatrix unimodular_inverse(const IntMatrix &m);

/// Size limits for brute-force work.
struct OracleCaps {
  /// Largest |F| evaluated element by element.
  std::size_t evaluation = 4096;
  /// Largest |F| whose whole endomorphism ring is enumerated.
  std::size_t enumeration = 16;
};

GroupExpr finite_group(std::span<const std::int64_t> moduli);

/// |F| = prod n_i, or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> group_order(std::span<const std::int64_t> moduli);

/// prod_{i,j} gcd(n_i, n_j).
Integer endomorphism_count(std::span<const std::int64_t> moduli);

/// Every endomorphism of F = (+) Z/n_i exactly once, as residue matrices in
/// odometer order over the entries. Restart with reset().
class EndomorphismStream {
public:
  /// Throws CapExceeded when |F| > caps.enumeration.
  explicit EndomorphismStream(std::vector<std::int64_t> moduli,
                              OracleCaps caps = {});

  std::optional<HomMatrix> next();
  void reset();

private:
  GroupExpr group_;
  std::vector<std::int64_t> orders_; // hom-group order per entry, row-major
  std::vector<std::int64_t> counter_;
  bool done_ = false;
};

/// Evaluates E on all of F; true iff the image has |F| distinct values.
/// Throws ShapeMismatch if E is not an endomorphism of a finite cyclic sum and
/// CapExceeded if |F| > caps.evaluation.
bool brute_force_is_auto(const HomMatrix &e, OracleCaps caps = {});

} // namespace lca
