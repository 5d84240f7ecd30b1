#pragma once

// Elementary LCA groups: finite direct sums of R, Z, T = R/Z and Z/n, their
// hom groups, and morphisms as block matrices of hom scalars.

#include "lca/matrix.hpp"
#include "lca/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lca {

enum class BlockKind { RealLine, IntegerLine, Circle, Cyclic };

class Block {
public:
  /// Z/1, the zero object.
  Block() = default;

  static Block real() { return Block(BlockKind::RealLine, 0); }
  static Block integers() { return Block(BlockKind::IntegerLine, 0); }
  static Block circle() { return Block(BlockKind::Circle, 0); }
  /// Throws Error(ValueError) unless n >= 1.
  static Block cyclic(std::int64_t n);

  BlockKind kind() const noexcept { return kind_; }
  /// Order of a cyclic block; 0 for the other kinds.
  std::int64_t modulus() const noexcept { return modulus_; }

  bool is_real() const noexcept { return kind_ == BlockKind::RealLine; }
  bool is_integer() const noexcept { return kind_ == BlockKind::IntegerLine; }
  bool is_circle() const noexcept { return kind_ == BlockKind::Circle; }
  bool is_cyclic() const noexcept { return kind_ == BlockKind::Cyclic; }
  bool is_trivial() const noexcept { return is_cyclic() && modulus_ == 1; }
  bool is_compact() const noexcept { return is_circle() || is_cyclic(); }

  std::string to_string() const;

  friend bool operator==(const Block &, const Block &) = default;

private:
  Block(BlockKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  BlockKind kind_ = BlockKind::Cyclic;
  std::int64_t modulus_ = 1;
};

/// Ordered direct sum of blocks. Order fixes matrix indexing; the empty
/// expression is the zero group.
class GroupExpr {
public:
  GroupExpr() = default;
  explicit GroupExpr(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}
  GroupExpr(std::initializer_list<Block> blocks) : blocks_(blocks) {}

  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }
  const Block &operator[](std::size_t i) const { return blocks_[i]; }
  const std::vector<Block> &blocks() const noexcept { return blocks_; }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  /// Blocks at the given indices, in that order.
  GroupExpr select(std::span<const std::size_t> indices) const;

  std::size_t count(BlockKind kind) const;

  /// "Z + T + Z/4 + R"; the zero group prints as "0".
  std::string to_string() const;

  friend bool operator==(const GroupExpr &, const GroupExpr &) = default;

private:
  std::vector<Block> blocks_;
};

GroupExpr direct_sum(const GroupExpr &a, const GroupExpr &b);

enum class HomKind { Zero, Real, Integer, CircleValue, Residue };

/// Which scalar encoding a hom group uses, and for residues its order.
struct HomDescriptor {
  HomKind kind = HomKind::Zero;
  std::int64_t order = 0;

  /// "0", "R", "Z", "T" or "Z/n".
  std::string to_string() const;

  friend bool operator==(const HomDescriptor &, const HomDescriptor &) = default;
};

/// The fixed hom table for elementary blocks:
///
///   R -> R, R -> T, Z -> R : Real (multiplication by a rational)
///   Z -> Z, T -> T        : Integer (for T, the degree)
///   Z -> T                : CircleValue (image of 1)
///   Z -> Z/n, Z/n -> T    : Residue mod n
///   Z/n -> Z/m            : Residue mod gcd(n, m)
///
/// Everything else, and every group with a trivial block on either side, is
/// Zero. A residue group of order 1 is also reported as Zero.
HomDescriptor hom_descriptor(const Block &src, const Block &dst);

/// An element of Hom(src, dst) in canonical form.
///
/// `value` is the coordinate of the element in its hom group: the rational
/// slope for Real, the integer (or degree) for Integer, the image of 1 in
/// [0, 1) for CircleValue, and a residue in [0, order) for Residue. Residues
/// mean:
///   Z -> Z/n      : 1 |-> a mod n
///   Z/n -> T      : 1 |-> a/n mod 1
///   Z/n -> Z/m    : 1 |-> a * (m/g) mod m, g = gcd(n, m)
class HomScalar {
public:
  /// Zero of Hom(Z/1, Z/1).
  HomScalar() = default;

  /// Reduces circle values mod 1 and residues mod the group order. Throws
  /// Error(ValueError) for non-integral Integer/Residue values and nonzero
  /// values in a Zero hom group.
  HomScalar(Block src, Block dst, Rational value);

  static HomScalar zero(Block src, Block dst) { return {src, dst, Rational(0)}; }

  /// The scalar acting as x |-> m * x on lifted representatives. Throws
  /// Error(ValueError) when m does not induce a well-defined homomorphism.
  static HomScalar from_multiplier(Block src, Block dst, const Rational &m);

  const Block &src() const noexcept { return src_; }
  const Block &dst() const noexcept { return dst_; }
  HomKind kind() const { return hom_descriptor(src_, dst_).kind; }
  HomDescriptor descriptor() const { return hom_descriptor(src_, dst_); }
  const Rational &value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }

  /// A rational c such that x |-> c * x on representatives realizes this map.
  Rational multiplier() const;

  /// Image of a canonical coordinate of `src` under this map.
  Rational apply(const Rational &x) const;

  friend bool operator==(const HomScalar &, const HomScalar &) = default;

private:
  Block src_;
  Block dst_;
  Rational value_;
};

/// g o f for f: A -> B and g: B -> C. Throws TagMismatch when f.dst != g.src.
HomScalar scalar_compose(const HomScalar &f, const HomScalar &g);
HomScalar scalar_add(const HomScalar &f, const HomScalar &g);
HomScalar scalar_negate(const HomScalar &f);

/// "3/2", "-1", "1/3 mod 1", "1 mod 2", "0".
std::string to_string(const HomScalar &s);

/// Canonical coordinate of a raw rational in block b (mod 1 for T, mod n
/// for Z/n). Throws Error(ValueError) for non-integers in Z or Z/n.
Rational canonical_coordinate(const Block &b, const Rational &x);

/// Morphism domain -> codomain. Entry (i, j) maps domain block j into
/// codomain block i, so composition is matrix multiplication.
class HomMatrix {
public:
  HomMatrix() = default;
  /// Throws Error(TagMismatch) unless each entry's blocks match its slot.
  HomMatrix(GroupExpr domain, GroupExpr codomain, Matrix<HomScalar> entries);

  static HomMatrix zero(const GroupExpr &domain, const GroupExpr &codomain);
  static HomMatrix identity(const GroupExpr &group);

  const GroupExpr &domain() const noexcept { return domain_; }
  const GroupExpr &codomain() const noexcept { return codomain_; }
  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  const HomScalar &operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }
  const Matrix<HomScalar> &entries() const noexcept { return entries_; }

  bool is_endomorphism() const { return domain_ == codomain_; }
  bool is_zero() const;

  /// Sub-matrix on the given codomain rows and domain columns.
  HomMatrix select(std::span<const std::size_t> rows,
                   std::span<const std::size_t> cols) const;

  friend bool operator==(const HomMatrix &, const HomMatrix &) = default;

private:
  GroupExpr domain_;
  GroupExpr codomain_;
  Matrix<HomScalar> entries_;
};

/// M o N (apply N first). Throws DomainMismatch unless N.codomain = M.domain.
HomMatrix compose(const HomMatrix &m, const HomMatrix &n);
HomMatrix add(const HomMatrix &m, const HomMatrix &n);
HomMatrix negate(const HomMatrix &m);

inline HomMatrix operator*(const HomMatrix &m, const HomMatrix &n) {
  return compose(m, n);
}
inline HomMatrix operator+(const HomMatrix &m, const HomMatrix &n) {
  return add(m, n);
}
inline HomMatrix operator-(const HomMatrix &m) { return negate(m); }
inline HomMatrix operator-(const HomMatrix &m, const HomMatrix &n) {
  return add(m, negate(n));
}

/// [[alpha, beta], [gamma, delta]] as a morphism of B (+) C, where B is
/// alpha's domain and C is delta's domain.
HomMatrix block_matrix(const HomMatrix &alpha, const HomMatrix &beta,
                       const HomMatrix &gamma, const HomMatrix &delta);

std::ostream &operator<<(std::ostream &os, const HomMatrix &m);
std::ostream &operator<<(std::ostream &os, const GroupExpr &g);

/// A point of an elementary group, one canonical coordinate per block.
class GroupElement {
public:
  GroupElement() = default;
  /// Reduces each coordinate into its canonical range.
  GroupElement(GroupExpr group, std::vector<Rational> coords);

  static GroupElement zero(const GroupExpr &group);

  const GroupExpr &group() const noexcept { return group_; }
  const std::vector<Rational> &coords() const noexcept { return coords_; }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const GroupElement &, const GroupElement &) = default;

private:
  GroupExpr group_;
  std::vector<Rational> coords_;
};

GroupElement operator+(const GroupElement &x, const GroupElement &y);
GroupElement operator-(const GroupElement &x);

/// M(x). Throws DomainMismatch unless x lies in M's domain.
GroupElement evaluate(const HomMatrix &m, const GroupElement &x);

/// Uniform-ish draws with |numerator|, denominator, integer entries bounded by
/// `bound`; residues are uniform in their group.
HomScalar random_scalar(const Block &src, const Block &dst, std::mt19937_64 &rng,
                        std::int64_t bound);
HomMatrix random_hom(const GroupExpr &domain, const GroupExpr &codomain,
                     std::mt19937_64 &rng, std::int64_t bound);
HomMatrix random_hom(const GroupExpr &domain, const GroupExpr &codomain,
                     std::uint64_t seed, std::int64_t bound);
GroupElement random_element(const GroupExpr &group, std::mt19937_64 &rng,
                            std::int64_t bound);

} // namespace lca
