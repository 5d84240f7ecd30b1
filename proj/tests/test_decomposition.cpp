#include "support.hpp"

#include "lca/decomposition.hpp"
#include "lca/error.hpp"
#include "lca/oracle.hpp"
#include "lca/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace lca;
using namespace lca::test;

namespace {

template <typename F> ErrorKind error_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ValueError;
}

void check_two_sided(const HomMatrix &m, const HomMatrix &inv) {
  const auto one = HomMatrix::identity(m.domain());
  CHECK(m * inv == one);
  CHECK(inv * m == one);
}

} // namespace

TEST_CASE("canonical_decomposition examples") {
  const auto c = canonical_decomposition(G("Z + R + T + R + Z/4"));
  CHECK(c.l1 == G("Z + T + Z/4"));
  CHECK(c.euclidean_rank == 2);
  CHECK(c.permutation == std::vector<std::size_t>{0, 2, 4, 1, 3});
  CHECK(c.split_group() == G("Z + T + Z/4 + R^2"));

  const auto r = canonical_decomposition(G("R^3"));
  CHECK(r.l1 == G("0"));
  CHECK(r.euclidean_rank == 3);

  const auto l = canonical_decomposition(G("T + Z/2"));
  CHECK(l.l1 == G("T + Z/2"));
  CHECK(l.euclidean_rank == 0);
  CHECK(l.permutation == std::vector<std::size_t>{0, 1});
}

TEST_CASE("conjugation round trip and equivariance") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_group(rng, 7, 9);
    const auto cert = canonical_decomposition(g);
    const auto m = random_hom(g, g, rng, 9);
    const auto c = conjugate_by_permutation(m, cert);
    CHECK(c.domain() == cert.split_group());
    CHECK(unconjugate_by_permutation(c, cert) == m);

    // P m x = c P x, with P the coordinate permutation.
    const auto x = random_element(g, rng, 9);
    std::vector<Rational> px;
    for (auto k : cert.permutation)
      px.push_back(x.coords()[k]);
    const auto mx = evaluate(m, x);
    const auto cpx = evaluate(c, GroupElement(cert.split_group(), px));
    for (std::size_t k = 0; k < cert.permutation.size(); ++k)
      CHECK(cpx.coords()[k] == mx.coords()[cert.permutation[k]]);
  }
}

TEST_CASE("stratify") {
  const auto s = stratify(G("Z/4 + Z + T + Z/6 + Z"));
  CHECK(s.free == std::vector<std::size_t>{1, 4});
  CHECK(s.toral == std::vector<std::size_t>{2});
  CHECK(s.finite == std::vector<std::size_t>{0, 3});
  CHECK(s.moduli == std::vector<std::int64_t>{4, 6});
  CHECK(error_of([] { stratify(G("Z + R")); }) == ErrorKind::ContainsRealBlock);
}

TEST_CASE("is_automorphism examples") {
  CHECK(is_automorphism(E("Z + R", {{"-1", "0"}, {"3/2", "2"}})));
  CHECK(is_automorphism(E("Z/2 + Z/4", {{"1", "1"}, {"1", "1"}})));
  CHECK_FALSE(is_automorphism(E("Z/4", {{"2"}})));
  CHECK_FALSE(is_automorphism(E("Z + R", {{"2", "0"}, {"0", "1"}})));
  CHECK(is_automorphism(HomMatrix::identity(G("0"))));

  const auto v = automorphism_verdict(E("Z + R", {{"2", "0"}, {"0", "1"}}));
  CHECK(v.failure == AutFailure::IntegerPart);
  CHECK(v.reason() == "Z-part determinant 2");
  CHECK(automorphism_verdict(E("R^2", {{"1", "2"}, {"2", "4"}})).reason() ==
        "R-part determinant 0");
  CHECK(automorphism_verdict(E("Z/4", {{"2"}})).reason() == "finite part kernel nontrivial");
  CHECK(automorphism_verdict(E("Z + T", {{"1", "0"}, {"0", "3"}})).reason() ==
        "T-part determinant 3");

  CHECK(error_of([] { is_automorphism(M("Z", "T", {{"1/2"}})); }) ==
        ErrorKind::DomainMismatch);
}

TEST_CASE("aut_l1 on Z + T") {
  // Degree 3 on T kills 1/3.
  const auto deg3 = E("Z + T", {{"1", "0"}, {"1/2", "3"}});
  CHECK_FALSE(aut_l1(deg3));
  CHECK(evaluate(deg3, X("Z + T", {"0", "1/3"})) == GroupElement::zero(G("Z + T")));

  const auto flip = E("Z + T", {{"1", "0"}, {"1/2", "-1"}});
  CHECK(aut_l1(flip));
  check_two_sided(flip, inverse_l1(flip));
  CHECK(error_of([&] { inverse_l1(deg3); }) == ErrorKind::NotAutomorphism);
  CHECK(error_of([] { aut_l1(E("R", {{"1"}})); }) == ErrorKind::ContainsRealBlock);
}

TEST_CASE("finite test against gcd on cyclic groups") {
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t a = 0; a < n; ++a) {
      const GroupExpr g{Block::cyclic(n)};
      const HomMatrix e(g, g, Matrix<HomScalar>{{HomScalar(g[0], g[0], Rational(a))}});
      CHECK(finite_automorphism_test(e) == (std::gcd(a, n) == 1));
    }
}

TEST_CASE("finite test and inverse against brute force") {
  for (const auto &moduli : std::vector<std::vector<std::int64_t>>{
           {2, 2}, {2, 4}, {4, 6}, {3, 3}, {2, 3}, {2, 2, 2}, {6, 2}, {4, 4}}) {
    EndomorphismStream s(moduli, OracleCaps{4096, 64});
    while (auto e = s.next()) {
      const bool aut = finite_automorphism_test(*e);
      CHECK(aut == brute_force_is_auto(*e));
      if (aut)
        check_two_sided(*e, finite_inverse(*e));
      else
        CHECK(error_of([&] { finite_inverse(*e); }) == ErrorKind::NotAutomorphism);
    }
  }
  CHECK(error_of([] { finite_automorphism_test(E("Z + Z/2", {{"1", "0"}, {"0", "1"}})); }) ==
        ErrorKind::ShapeMismatch);
}

TEST_CASE("inverse examples") {
  const auto a = E("Z + R", {{"-1", "0"}, {"3/2", "2"}});
  CHECK(inverse(a) == E("Z + R", {{"-1", "0"}, {"3/4", "1/2"}}));
  CHECK(inverse(E("T + R", {{"1", "1/3"}, {"0", "2"}})) ==
        E("T + R", {{"1", "-1/6"}, {"0", "1/2"}}));
  const auto id = HomMatrix::identity(G("Z + T + Z/4 + R"));
  CHECK(inverse(id) == id);
  CHECK(inverse(E("R^2", {{"2", "1"}, {"1", "1"}})) == E("R^2", {{"1", "-1"}, {"-1", "2"}}));
  CHECK(error_of([] { inverse(E("Z/4", {{"2"}})); }) == ErrorKind::NotAutomorphism);

  // Real blocks interleaved with L1 blocks.
  const auto mixed = E("R + Z + T", {{"2", "1/2", "0"}, {"0", "1", "0"}, {"1/3", "1/4", "1"}});
  check_two_sided(mixed, inverse(mixed));
}

TEST_CASE("random automorphisms invert exactly") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_group(rng, 7, 8);
    const auto m = random_automorphism(g, rng, 9);
    CHECK(is_automorphism(m));
    check_two_sided(m, inverse(m));
  }
}

TEST_CASE("quasi_determinant_lca") {
  const auto q = quasi_determinant_lca(E("Z + R", {{"-1", "0"}, {"3/2", "2"}}));
  CHECK(q == E("Z", {{"-1"}}));

  // The Z -> R -> T path survives: q differs from alpha.
  const auto m = E("Z + T + R", {{"1", "0", "0"}, {"0", "1", "1/2"}, {"1", "0", "1"}});
  const auto qm = quasi_determinant_lca(m);
  CHECK(qm == E("Z + T", {{"1", "0"}, {"1/2", "1"}}));
  CHECK_FALSE(qm == canonical_blocks(m).phi.alpha);
  CHECK(is_automorphism(m));

  CHECK(error_of([] { quasi_determinant_lca(E("Z + R", {{"1", "0"}, {"1", "0"}})); }) ==
        ErrorKind::DeltaNotInvertible);

  std::mt19937_64 rng(3);
  const auto g = G("Z^2 + T + Z/4 + Z/6 + R^2");
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const auto e = random_endomorphism_biased(g, rng, 9, 0.5);
    const auto phi = canonical_blocks(e).phi;
    if (rational_determinant(real_part_matrix(phi.delta)) == 0)
      continue;
    ++checked;
    CHECK(aut_l1(phi.alpha) == aut_l1(quasi_determinant_lca(e)));
    CHECK(aut_l1(phi.alpha) == is_automorphism(e));
  }
  CHECK(checked > 50);
}

TEST_CASE("triangular shapes") {
  const auto r = triangular_corollary_shapes(G("T + Z/3 + R^2 + Z^2"));
  CHECK(r.compact == G("T + Z/3"));
  CHECK(r.euclidean == G("R^2"));
  CHECK(r.discrete == G("Z^2"));
  CHECK(r.upper_triangular());
  REQUIRE(r.assertions.size() == 3);
  CHECK(r.assertions[0].slot == "Hom(K, R^n)");
  CHECK(r.assertions[1].slot == "Hom(K, Z^m)");
  CHECK(r.assertions[2].slot == "Hom(R^n, Z^m)");
  for (const auto &a : r.assertions)
    CHECK(a.zero);
  // The upper slots carry maps: Z -> T, R -> T, Z -> R.
  CHECK_FALSE(r.zero_slot[0][2]);
  CHECK_FALSE(r.zero_slot[0][1]);
  CHECK_FALSE(r.zero_slot[1][2]);

  CHECK(triangular_corollary_shapes(G("T")).assertions.empty());
}

TEST_CASE("triangular test agrees with the split test") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_group(rng, 7, 6);
    const auto m = random_endomorphism_biased(g, rng, 9, 0.6);
    CHECK(is_automorphism_triangular(m) == is_automorphism(m));
  }
}

TEST_CASE("permutation leaves the euclidean rank fixed") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_group(rng, 8, 9);
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const auto a = canonical_decomposition(g);
    const auto b = canonical_decomposition(g.select(p));
    CHECK(a.euclidean_rank == b.euclidean_rank);
    CHECK(a.l1.size() == b.l1.size());
  }
}
