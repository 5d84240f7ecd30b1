#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lca {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer &num, const Integer &den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational &r) { return r.get_den() == 1; }

/// Floor of a rational.
Integer floor(const Rational &r);

/// Representative of r modulo 1 in [0, 1).
Rational frac(const Rational &r);

/// Least non-negative residue of a modulo m (m > 0).
Integer mod(const Integer &a, const Integer &m);

Integer gcd(const Integer &a, const Integer &b);

/// "p/q" with q > 0 and gcd(|p|, q) = 1; integral values print as "p".
std::string to_string(const Rational &r);
std::string to_string(const Integer &z);

/// Parses "p", "-p", "p/q". Throws Error(ValueError) on malformed text or
/// a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

} // namespace lca
