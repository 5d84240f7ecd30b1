#pragma once

#include "lca/document.hpp"
#include "lca/group.hpp"

#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace doctest {
template <> struct StringMaker<lca::HomMatrix> {
  static String convert(const lca::HomMatrix &m) {
    std::ostringstream os;
    os << m;
    return os.str().c_str();
  }
};
template <> struct StringMaker<lca::GroupExpr> {
  static String convert(const lca::GroupExpr &g) { return g.to_string().c_str(); }
};
} // namespace doctest

namespace lca::test {

inline GroupExpr G(const char *text) { return parse_group(text); }

/// Morphism from group expressions and one rational literal per entry.
inline HomMatrix M(const char *domain, const char *codomain,
                   std::initializer_list<std::initializer_list<const char *>> rows) {
  const auto dom = parse_group(domain);
  const auto cod = parse_group(codomain);
  Matrix<HomScalar> e(cod.size(), dom.size());
  std::size_t i = 0;
  for (const auto &row : rows) {
    std::size_t j = 0;
    for (const char *v : row) {
      e(i, j) = HomScalar(dom[j], cod[i], parse_rational(v));
      ++j;
    }
    ++i;
  }
  return {dom, cod, std::move(e)};
}

inline HomMatrix E(const char *group,
                   std::initializer_list<std::initializer_list<const char *>> rows) {
  return M(group, group, rows);
}

inline Rational Q(const char *text) { return parse_rational(text); }

inline GroupElement X(const char *group, std::initializer_list<const char *> coords) {
  std::vector<Rational> c;
  for (const char *v : coords)
    c.push_back(parse_rational(v));
  return {parse_group(group), std::move(c)};
}

} // namespace lca::test
