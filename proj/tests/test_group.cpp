#include "support.hpp"

#include "lca/error.hpp"
#include "lca/group.hpp"

#include <random>

using namespace lca;
using namespace lca::test;

namespace {

// Maps straight from the hom-table definitions, element by element.
Rational reference_image(const HomScalar &s, const Rational &x) {
  const auto &src = s.src();
  const auto &dst = s.dst();
  const auto &v = s.value();
  switch (s.kind()) {
  case HomKind::Zero: return 0;
  case HomKind::Real:
    return dst.is_circle() ? frac(v * x) : Rational(v * x);
  case HomKind::Integer:
    return dst.is_circle() ? frac(v * x) : Rational(v * x);
  case HomKind::CircleValue: return frac(v * x);
  case HomKind::Residue: {
    if (src.is_integer())
      return Rational(mod(Integer(v * x), Integer(dst.modulus())));
    if (dst.is_circle())
      return frac(v * x / Rational(src.modulus()));
    const auto g = std::gcd(src.modulus(), dst.modulus());
    return Rational(mod(Integer(v * Rational(dst.modulus() / g) * x),
                        Integer(dst.modulus())));
  }
  }
  return 0;
}

std::vector<Block> vocabulary() {
  return {Block::real(),      Block::integers(),  Block::circle(),
          Block::cyclic(1),   Block::cyclic(2),   Block::cyclic(4),
          Block::cyclic(6),   Block::cyclic(9)};
}

std::vector<Rational> sample_points(const Block &b, std::mt19937_64 &rng) {
  std::vector<Rational> pts;
  for (int i = 0; i < 6; ++i)
    pts.push_back(random_element(GroupExpr{b}, rng, 9)[0]);
  if (b.is_cyclic() || b.is_integer())
    pts.push_back(canonical_coordinate(b, 1));
  return pts;
}

} // namespace

TEST_CASE("hom table: named entries") {
  CHECK(hom_descriptor(Block::real(), Block::integers()).kind == HomKind::Zero);
  CHECK(hom_descriptor(Block::circle(), Block::real()).kind == HomKind::Zero);
  CHECK(hom_descriptor(Block::cyclic(6), Block::cyclic(4)) ==
        HomDescriptor{HomKind::Residue, 2});
  CHECK(hom_descriptor(Block::real(), Block::circle()).kind == HomKind::Real);
  CHECK(hom_descriptor(Block::integers(), Block::circle()).kind == HomKind::CircleValue);
  CHECK(hom_descriptor(Block::circle(), Block::circle()).kind == HomKind::Integer);
  CHECK(hom_descriptor(Block::cyclic(5), Block::circle()) ==
        HomDescriptor{HomKind::Residue, 5});
  CHECK(hom_descriptor(Block::integers(), Block::cyclic(7)) ==
        HomDescriptor{HomKind::Residue, 7});
  CHECK(hom_descriptor(Block::cyclic(1), Block::circle()).kind == HomKind::Zero);
  CHECK(hom_descriptor(Block::integers(), Block::cyclic(1)).kind == HomKind::Zero);
}

TEST_CASE("hom table: Hom(Z/6, Z/4) by enumerating all set maps") {
  int homs = 0;
  for (int code = 0; code < 4096; ++code) { // 4^6 functions
    int f[6];
    for (int a = 0, c = code; a < 6; ++a, c /= 4)
      f[a] = c % 4;
    bool hom = true;
    for (int a = 0; a < 6 && hom; ++a)
      for (int b = 0; b < 6 && hom; ++b)
        hom = f[(a + b) % 6] == (f[a] + f[b]) % 4;
    homs += hom;
  }
  CHECK(homs == 2);
  CHECK(hom_descriptor(Block::cyclic(6), Block::cyclic(4)).order == homs);
}

TEST_CASE("hom table: cyclic hom group orders match generator enumeration") {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t m = 1; m <= 12; ++m) {
      int count = 0;
      for (std::int64_t y = 0; y < m; ++y)
        count += (n * y) % m == 0;
      const auto d = hom_descriptor(Block::cyclic(n), Block::cyclic(m));
      CHECK(count == (d.kind == HomKind::Zero ? 1 : d.order));
    }
}

TEST_CASE("hom table: exhaustive zero patterns") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto zn = Block::cyclic(n);
    CHECK(hom_descriptor(Block::circle(), Block::real()).kind == HomKind::Zero);
    CHECK(hom_descriptor(zn, Block::real()).kind == HomKind::Zero);
    CHECK(hom_descriptor(Block::real(), Block::integers()).kind == HomKind::Zero);
    CHECK(hom_descriptor(Block::real(), zn).kind == HomKind::Zero);
    CHECK(hom_descriptor(Block::circle(), Block::integers()).kind == HomKind::Zero);
    CHECK(hom_descriptor(Block::circle(), zn).kind == HomKind::Zero);
    CHECK(hom_descriptor(zn, Block::integers()).kind == HomKind::Zero);
  }
}

TEST_CASE("scalar construction canonicalizes and rejects bad values") {
  const HomScalar c(Block::integers(), Block::circle(), Q("7/3"));
  CHECK(c.value() == Q("1/3"));
  const HomScalar r(Block::integers(), Block::cyclic(4), Q("-1"));
  CHECK(r.value() == 3);
  CHECK_THROWS_AS(HomScalar(Block::integers(), Block::integers(), Q("1/2")), Error);
  CHECK_THROWS_AS(HomScalar(Block::circle(), Block::real(), Q("1")), Error);
  // Real slopes into T are not reduced: Hom(R, T) is a copy of R.
  CHECK(HomScalar(Block::real(), Block::circle(), Q("-1/6")).value() == Q("-1/6"));
}

TEST_CASE("scalar_compose examples") {
  // Z/4 -> T (1 |-> 1/4) then degree 3 on T: 1 |-> 3/4.
  const HomScalar f1(Block::cyclic(4), Block::circle(), 1);
  const HomScalar g1(Block::circle(), Block::circle(), 3);
  const auto c1 = scalar_compose(f1, g1);
  CHECK(c1 == HomScalar(Block::cyclic(4), Block::circle(), 3));
  CHECK(c1.apply(1) == Q("3/4"));

  // Z/6 -> Z/4 (1 |-> 2) then Z/4 -> T (1 |-> 1/4): 1 |-> 1/2 = 3/6.
  const HomScalar f2(Block::cyclic(6), Block::cyclic(4), 1);
  const HomScalar g2(Block::cyclic(4), Block::circle(), 1);
  const auto c2 = scalar_compose(f2, g2);
  CHECK(c2 == HomScalar(Block::cyclic(6), Block::circle(), 3));
  CHECK(c2.apply(1) == Q("1/2"));

  const auto z = HomScalar::zero(Block::circle(), Block::circle());
  CHECK(scalar_compose(f1, z).is_zero());
  CHECK(scalar_compose(HomScalar::zero(Block::cyclic(4), Block::circle()), g1).is_zero());

  CHECK_THROWS_AS(scalar_compose(f1, f2), Error);
}

TEST_CASE("scalar_compose and scalar_add agree with evaluation for every block triple") {
  std::mt19937_64 rng(2024);
  const auto vocab = vocabulary();
  for (const auto &a : vocab)
    for (const auto &b : vocab)
      for (const auto &c : vocab)
        for (int trial = 0; trial < 4; ++trial) {
          const auto f = random_scalar(a, b, rng, 9);
          const auto g = random_scalar(b, c, rng, 9);
          const auto f2 = random_scalar(a, b, rng, 9);
          const auto gf = scalar_compose(f, g);
          const auto sum = scalar_add(f, f2);
          for (const auto &x : sample_points(a, rng)) {
            CHECK(reference_image(gf, x) == reference_image(g, reference_image(f, x)));
            CHECK(reference_image(sum, x) ==
                  canonical_coordinate(b, reference_image(f, x) + reference_image(f2, x)));
            CHECK(f.apply(x) == reference_image(f, x));
          }
        }
}

TEST_CASE("addition in hom groups") {
  const HomScalar c(Block::integers(), Block::circle(), Q("2/3"));
  CHECK(scalar_add(c, c) == HomScalar(Block::integers(), Block::circle(), Q("1/3")));
  const HomScalar r3(Block::integers(), Block::cyclic(4), 3);
  const HomScalar r2(Block::integers(), Block::cyclic(4), 2);
  CHECK(scalar_add(r3, r2).value() == 1);
  CHECK(scalar_negate(r3).value() == 1);

  const auto m = E("Z + T + Z/4", {{"2", "0", "0"}, {"1/2", "3", "1"}, {"1", "0", "3"}});
  CHECK(m + HomMatrix::zero(m.domain(), m.codomain()) == m);
  CHECK((m - m).is_zero());
  CHECK_THROWS_AS(m + HomMatrix::zero(G("Z"), G("Z")), Error);
}

TEST_CASE("matrix composition") {
  std::mt19937_64 rng(5);
  const auto l = G("Z + R");
  const auto m = random_hom(l, l, rng, 9);
  CHECK(m * HomMatrix::identity(l) == m);
  CHECK(HomMatrix::identity(l) * m == m);

  for (int t = 0; t < 20; ++t) {
    const auto a = random_hom(l, l, rng, 9);
    const auto b = random_hom(l, l, rng, 9);
    const auto x = X("Z + R", {"1", "1/2"});
    CHECK(evaluate(a * b, x) == evaluate(a, evaluate(b, x)));
  }

  // Hom(L1, R^n) o Hom(R^n, L1) over L1 = Z + T vanishes.
  const auto gamma = random_hom(G("Z + T"), G("R"), rng, 9);
  const auto beta = random_hom(G("R"), G("Z + T"), rng, 9);
  CHECK((gamma * beta).is_zero());
  CHECK(gamma(0, 1).is_zero());

  CHECK_THROWS_AS(gamma * gamma, Error);
}

TEST_CASE("evaluate examples") {
  const auto x = X("Z + T + Z/6 + R", {"-3", "5/7", "4", "2/3"});
  CHECK(evaluate(HomMatrix::identity(x.group()), x) == x);

  const auto quarter = M("Z", "T", {{"1/4"}});
  CHECK(evaluate(quarter, X("Z", {"3"})) == X("T", {"3/4"}));

  const auto twice = M("Z/6", "Z/4", {{"1"}});
  CHECK(evaluate(twice, X("Z/6", {"5"})) == X("Z/4", {"2"}));

  CHECK_THROWS_AS(evaluate(twice, X("Z/4", {"1"})), Error);
}

TEST_CASE("ring axioms on sampled endomorphism rings") {
  std::mt19937_64 rng(77);
  const std::vector<GroupExpr> groups = {G("Z^2 + T + Z/4 + Z/6 + R^2"), G("T + R + Z/3"),
                                         G("Z/2 + Z/4 + Z/8"), G("R^3"), G("Z + Z/1 + T")};
  for (const auto &l : groups)
    for (int t = 0; t < 25; ++t) {
      const auto a = random_hom(l, l, rng, 9);
      const auto b = random_hom(l, l, rng, 9);
      const auto c = random_hom(l, l, rng, 9);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * HomMatrix::identity(l) == a);
      CHECK((a * HomMatrix::zero(l, l)).is_zero());
    }
}

TEST_CASE("evaluation is additive (1000 samples)") {
  std::mt19937_64 rng(1000);
  const auto dom = G("Z^2 + T + Z/4 + Z/6 + R^2");
  const auto cod = G("T + Z/12 + R + Z + Z/2");
  for (int t = 0; t < 1000; ++t) {
    const auto m = random_hom(dom, cod, rng, 9);
    const auto x = random_element(dom, rng, 9);
    const auto y = random_element(dom, rng, 9);
    REQUIRE(evaluate(m, x + y) == evaluate(m, x) + evaluate(m, y));
  }
}

TEST_CASE("canonical ranges are closed under the operations") {
  std::mt19937_64 rng(3);
  const auto l = G("Z + T + Z/4 + Z/6 + R");
  for (int t = 0; t < 100; ++t) {
    const auto a = random_hom(l, l, rng, 9);
    const auto b = random_hom(l, l, rng, 9);
    for (const auto &m : {a * b, a + b, -a}) {
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const auto &s = m(i, j);
          const auto d = s.descriptor();
          if (d.kind == HomKind::CircleValue)
            CHECK((s.value() >= 0 && s.value() < 1));
          if (d.kind == HomKind::Residue)
            CHECK((s.value() >= 0 && s.value() < d.order && is_integral(s.value())));
        }
    }
  }
}

TEST_CASE("random_hom is deterministic, bounded and tag-valid") {
  const auto l = G("Z + T");
  const auto r = G("R");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_hom(l, r, seed, 9);
    CHECK(m(0, 1).is_zero());
    CHECK(m == random_hom(l, r, seed, 9));
  }
  const auto rr = random_hom(G("R"), G("R"), 11, 5);
  CHECK(abs(rr(0, 0).value().get_num()) <= 5);
  CHECK(rr(0, 0).value().get_den() <= 5);
}

TEST_CASE("block constructors validate") {
  CHECK_THROWS_AS(Block::cyclic(0), Error);
  CHECK(Block::cyclic(1).is_trivial());
  CHECK(G("Z/1 + R").to_string() == "Z/1 + R");
  CHECK(GroupExpr{}.to_string() == "0");
}
