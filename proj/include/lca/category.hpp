#pragma once

// Generic 2x2 automorphism engine over an additive category.
//
// An instance supplies hom-membership, composition, the abelian group
// structure on hom sets, and an automorphism test / inverse for the objects
// that appear on the diagonal. Everything below is written once against that
// contract. compose(g, f) means "apply f first".

#include "lca/error.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>

namespace lca {

template <typename C>
concept AdditiveCategory =
    requires(const C &cat, const typename C::Object &a,
             const typename C::Morphism &f) {
      typename C::Object;
      typename C::Morphism;
      { cat.in_hom(f, a, a) } -> std::convertible_to<bool>;
      { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
      { cat.add(f, f) } -> std::same_as<typename C::Morphism>;
      { cat.negate(f) } -> std::same_as<typename C::Morphism>;
      { cat.zero(a, a) } -> std::same_as<typename C::Morphism>;
      { cat.identity(a) } -> std::same_as<typename C::Morphism>;
      { cat.equal(f, f) } -> std::convertible_to<bool>;
      { cat.is_zero(f) } -> std::convertible_to<bool>;
      { cat.is_automorphism(a, f) } -> std::convertible_to<bool>;
      { cat.invert(a, f) } -> std::same_as<typename C::Morphism>;
    };

/// Endomorphism of A = B (+) C in block form [[alpha, beta], [gamma, delta]].
template <AdditiveCategory C> struct Block2Endo {
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  Object b;
  Object c;
  Morphism alpha; // B -> B
  Morphism beta;  // C -> B
  Morphism gamma; // B -> C
  Morphism delta; // C -> C

  /// Throws DomainMismatch unless every field lies in its hom group.
  void validate(const C &cat) const {
    if (!cat.in_hom(alpha, b, b) || !cat.in_hom(beta, c, b) ||
        !cat.in_hom(gamma, b, c) || !cat.in_hom(delta, c, c))
      throw Error(ErrorKind::DomainMismatch,
                  "block entry outside its declared hom group");
  }
};

enum class Condition { I, II };

template <AdditiveCategory C> struct ConditionWitness {
  Condition condition = Condition::II;
  bool passed = true;
  std::size_t trials_run = 0;
  /// (gamma: B -> C, beta: C -> B) with gamma o beta != 0.
  std::optional<std::pair<typename C::Morphism, typename C::Morphism>>
      counterexample;
};

template <AdditiveCategory C> struct Factorization {
  Block2Endo<C> scale_c; // diag(1_B, delta)
  Block2Endo<C> upper;   // [[1_B, beta], [0, 1_C]]
  Block2Endo<C> scale_b; // diag(qdet, 1_C)
  Block2Endo<C> lower;   // [[1_B, 0], [delta^-1 gamma, 1_C]]
};

template <AdditiveCategory C>
typename C::Morphism sub(const C &cat, const typename C::Morphism &f,
                         const typename C::Morphism &g) {
  return cat.add(f, cat.negate(g));
}

template <AdditiveCategory C>
Block2Endo<C> block_identity(const C &cat, const typename C::Object &b,
                             const typename C::Object &c) {
  return {b, c, cat.identity(b), cat.zero(c, b), cat.zero(b, c),
          cat.identity(c)};
}

/// x o y as 2x2 block matrices.
template <AdditiveCategory C>
Block2Endo<C> block_compose(const C &cat, const Block2Endo<C> &x,
                            const Block2Endo<C> &y) {
  auto dot = [&](const auto &p, const auto &q, const auto &r, const auto &s) {
    return cat.add(cat.compose(p, q), cat.compose(r, s));
  };
  return {x.b,
          x.c,
          dot(x.alpha, y.alpha, x.beta, y.gamma),
          dot(x.alpha, y.beta, x.beta, y.delta),
          dot(x.gamma, y.alpha, x.delta, y.gamma),
          dot(x.gamma, y.beta, x.delta, y.delta)};
}

template <AdditiveCategory C>
bool block_equal(const C &cat, const Block2Endo<C> &x, const Block2Endo<C> &y) {
  return cat.equal(x.alpha, y.alpha) && cat.equal(x.beta, y.beta) &&
         cat.equal(x.gamma, y.gamma) && cat.equal(x.delta, y.delta);
}

template <AdditiveCategory C>
bool is_block_identity(const C &cat, const Block2Endo<C> &x) {
  return block_equal(cat, x, block_identity(cat, x.b, x.c));
}

namespace detail {

template <AdditiveCategory C>
typename C::Morphism delta_inverse(const C &cat, const Block2Endo<C> &phi) {
  if (!cat.is_automorphism(phi.c, phi.delta))
    throw Error(ErrorKind::DeltaNotInvertible,
                "delta is not an automorphism of C");
  return cat.invert(phi.c, phi.delta);
}

} // namespace detail

/// alpha - beta o delta^-1 o gamma.
template <AdditiveCategory C>
typename C::Morphism quasi_determinant(const Block2Endo<C> &phi, const C &cat) {
  phi.validate(cat);
  const auto d_inv = detail::delta_inverse(cat, phi);
  return sub(cat, phi.alpha,
             cat.compose(phi.beta, cat.compose(d_inv, phi.gamma)));
}

/// Valid when the instance satisfies conditions I and II for (B, C):
/// phi is invertible iff delta and alpha are.
template <AdditiveCategory C>
bool is_automorphism_2x2(const Block2Endo<C> &phi, const C &cat) {
  phi.validate(cat);
  return cat.is_automorphism(phi.c, phi.delta) &&
         cat.is_automorphism(phi.b, phi.alpha);
}

template <AdditiveCategory C>
Factorization<C> factorize(const Block2Endo<C> &phi, const C &cat) {
  phi.validate(cat);
  const auto d_inv = detail::delta_inverse(cat, phi);
  const auto q = sub(cat, phi.alpha,
                     cat.compose(phi.beta, cat.compose(d_inv, phi.gamma)));
  const auto &b = phi.b;
  const auto &c = phi.c;
  return {
      {b, c, cat.identity(b), cat.zero(c, b), cat.zero(b, c), phi.delta},
      {b, c, cat.identity(b), phi.beta, cat.zero(b, c), cat.identity(c)},
      {b, c, q, cat.zero(c, b), cat.zero(b, c), cat.identity(c)},
      {b, c, cat.identity(b), cat.zero(c, b), cat.compose(d_inv, phi.gamma),
       cat.identity(c)},
  };
}

/// Ordered product scale_c o upper o scale_b o lower.
template <AdditiveCategory C>
Block2Endo<C> product(const Factorization<C> &f, const C &cat) {
  return block_compose(
      cat, block_compose(cat, block_compose(cat, f.scale_c, f.upper), f.scale_b),
      f.lower);
}

/// [[q^-1, -q^-1 beta delta^-1], [-delta^-1 gamma q^-1, delta^-1]].
///
/// The lower-right entry drops delta^-1 gamma q^-1 beta delta^-1, which
/// vanishes under condition II.
template <AdditiveCategory C>
Block2Endo<C> inverse_2x2(const Block2Endo<C> &phi, const C &cat) {
  if (!is_automorphism_2x2(phi, cat))
    throw Error(ErrorKind::NotAutomorphism, "2x2 block endomorphism");
  const auto d_inv = cat.invert(phi.c, phi.delta);
  const auto q = sub(cat, phi.alpha,
                     cat.compose(phi.beta, cat.compose(d_inv, phi.gamma)));
  const auto q_inv = cat.invert(phi.b, q);
  return {phi.b,
          phi.c,
          q_inv,
          cat.negate(cat.compose(q_inv, cat.compose(phi.beta, d_inv))),
          cat.negate(cat.compose(d_inv, cat.compose(phi.gamma, q_inv))),
          d_inv};
}

/// alpha^-1 = q^-1 (1 - beta delta^-1 gamma q^-1), from the inverse of q.
template <AdditiveCategory C>
typename C::Morphism alpha_inverse_from_qdet(const Block2Endo<C> &phi,
                                             const typename C::Morphism &q_inv,
                                             const C &cat) {
  const auto d_inv = detail::delta_inverse(cat, phi);
  const auto correction = cat.compose(
      phi.beta, cat.compose(d_inv, cat.compose(phi.gamma, q_inv)));
  return cat.compose(q_inv, sub(cat, cat.identity(phi.b), correction));
}

/// q^-1 = alpha^-1 (1 + beta delta^-1 gamma alpha^-1), from the inverse of alpha.
template <AdditiveCategory C>
typename C::Morphism qdet_inverse_from_alpha(
    const Block2Endo<C> &phi, const typename C::Morphism &alpha_inv,
    const C &cat) {
  const auto d_inv = detail::delta_inverse(cat, phi);
  const auto correction = cat.compose(
      phi.beta, cat.compose(d_inv, cat.compose(phi.gamma, alpha_inv)));
  return cat.compose(alpha_inv, cat.add(cat.identity(phi.b), correction));
}

/// Inverse of 1 + n for square-zero n, which is 1 - n.
template <AdditiveCategory C>
typename C::Morphism one_plus_nilpotent_inverse(const typename C::Morphism &n,
                                                const typename C::Object &b,
                                                const C &cat) {
  if (!cat.in_hom(n, b, b))
    throw Error(ErrorKind::DomainMismatch, "n is not an endomorphism of B");
  if (!cat.is_zero(cat.compose(n, n)))
    throw Error(ErrorKind::NotSquareZero, "n o n != 0");
  const auto one = cat.identity(b);
  auto result = sub(cat, one, n);
  if (!cat.equal(cat.compose(cat.add(one, n), result), one))
    throw Error(ErrorKind::NotSquareZero, "(1 + n)(1 - n) != 1");
  return result;
}

/// Randomized audit of condition II: samples (gamma, beta) pairs and checks
/// gamma o beta = 0. `sampler(i)` returns the i-th pair.
template <AdditiveCategory C, typename Sampler>
  requires std::invocable<Sampler &, std::size_t>
ConditionWitness<C> check_condition_II(const typename C::Object &b,
                                       const typename C::Object &c,
                                       const C &cat, Sampler &&sampler,
                                       std::size_t trials) {
  ConditionWitness<C> witness;
  witness.condition = Condition::II;
  for (std::size_t i = 0; i < trials; ++i) {
    auto [gamma, beta] = sampler(i);
    if (!cat.in_hom(gamma, b, c) || !cat.in_hom(beta, c, b))
      throw Error(ErrorKind::DomainMismatch, "sampled pair outside Hom(B,C) x Hom(C,B)");
    ++witness.trials_run;
    if (!cat.is_zero(cat.compose(gamma, beta))) {
      witness.passed = false;
      witness.counterexample.emplace(std::move(gamma), std::move(beta));
      break;
    }
  }
  return witness;
}

} // namespace lca
