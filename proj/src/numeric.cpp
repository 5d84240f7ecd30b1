#include "lca/numeric.hpp"

#include "lca/error.hpp"

#include <cctype>

namespace lca {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::DeltaNotInvertible: return "DeltaNotInvertible";
  case ErrorKind::NotAutomorphism: return "NotAutomorphism";
  case ErrorKind::NotSquareZero: return "NotSquareZero";
  case ErrorKind::TagMismatch: return "TagMismatch";
  case ErrorKind::DomainMismatch: return "DomainMismatch";
  case ErrorKind::ContainsRealBlock: return "ContainsRealBlock";
  case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::ValueError: return "ValueError";
  }
  return "Error";
}

Integer floor(const Rational &r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational frac(const Rational &r) { return r - Rational(floor(r)); }

Integer mod(const Integer &a, const Integer &m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd(const Integer &a, const Integer &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string to_string(const Integer &z) { return z.get_str(); }

std::string to_string(const Rational &r) {
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text))
    throw Error(ErrorKind::ValueError,
                "malformed integer '" + std::string(text) + "'");
  return integer_from(text);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text));
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::ValueError,
                "malformed rational '" + std::string(text) + "'");
  const Integer d = integer_from(den);
  if (d == 0)
    throw Error(ErrorKind::ValueError, "zero denominator");
  return make_rational(integer_from(num), d);
}

} // namespace lca
