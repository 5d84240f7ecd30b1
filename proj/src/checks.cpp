#include "lca/checks.hpp"

#include "lca/category.hpp"
#include "lca/decomposition.hpp"
#include "lca/document.hpp"
#include "lca/error.hpp"
#include "lca/sampling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace lca {

namespace {

using Trial = std::function<std::string(std::mt19937_64 &)>;

const GroupExpr &mixed_group() {
  static const GroupExpr g = parse_group("Z^2 + T + Z/4 + Z/6 + R^2");
  return g;
}

std::string show(const HomMatrix &m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string condition_two(std::mt19937_64 &rng) {
  const auto group = random_group(rng, 6, 12);
  const auto cert = canonical_decomposition(group);
  const GroupExpr reals(std::vector<Block>(cert.euclidean_rank, Block::real()));
  const auto witness = check_condition_II(
      cert.l1, reals, LcaCategory{},
      [&](std::size_t) {
        return std::pair{random_hom(cert.l1, reals, rng, 9),
                         random_hom(reals, cert.l1, rng, 9)};
      },
      1);
  if (!witness.passed)
    return "gamma = " + show(witness.counterexample->first) +
           ", beta = " + show(witness.counterexample->second);
  return {};
}

std::string ring_axioms(std::mt19937_64 &rng) {
  const auto g = random_group(rng, 5, 12);
  const auto a = random_hom(g, g, rng, 9);
  const auto b = random_hom(g, g, rng, 9);
  const auto c = random_hom(g, g, rng, 9);
  const auto one = HomMatrix::identity(g);
  if (!((a * b) * c == a * (b * c)))
    return "associativity fails for " + show(a) + ", " + show(b) + ", " + show(c);
  if (!(a * (b + c) == a * b + a * c) || !((a + b) * c == a * c + b * c))
    return "bilinearity fails for " + show(a) + ", " + show(b) + ", " + show(c);
  if (!(a * one == a) || !(one * a == a))
    return "identity fails for " + show(a);
  const auto zero = HomMatrix::zero(g, g);
  if (!(a * zero == zero) || !(zero * a == zero) || !(a + zero == a))
    return "zero fails for " + show(a);
  return {};
}

std::string homomorphism(std::mt19937_64 &rng) {
  const auto g = random_group(rng, 5, 12);
  const auto h = random_group(rng, 5, 12);
  const auto m = random_hom(g, h, rng, 9);
  const auto x = random_element(g, rng, 9);
  const auto y = random_element(g, rng, 9);
  if (!(evaluate(m, x + y) == evaluate(m, x) + evaluate(m, y)))
    return "additivity fails for " + show(m);
  return {};
}

std::string composition_evaluation(std::mt19937_64 &rng) {
  const auto a = random_group(rng, 4, 12);
  const auto b = random_group(rng, 4, 12);
  const auto c = random_group(rng, 4, 12);
  const auto n = random_hom(a, b, rng, 9);
  const auto m = random_hom(b, c, rng, 9);
  const auto x = random_element(a, rng, 9);
  if (!(evaluate(m * n, x) == evaluate(m, evaluate(n, x))))
    return "(M o N)(x) != M(N(x)) for M = " + show(m) + ", N = " + show(n);
  return {};
}

std::string factorization(std::mt19937_64 &rng) {
  const auto m = random_automorphism(mixed_group(), rng, 9);
  const auto phi = canonical_blocks(m).phi;
  const LcaCategory cat;
  if (!block_equal(cat, product(factorize(phi, cat), cat), phi))
    return "factor product differs from " + show(m);
  return {};
}

std::string inverse_check(std::mt19937_64 &rng) {
  const auto m = random_automorphism(mixed_group(), rng, 9);
  const auto inv = inverse(m);
  const auto one = HomMatrix::identity(m.domain());
  if (!(inv * m == one) || !(m * inv == one))
    return "inverse fails for " + show(m);
  return {};
}

std::string criterion(std::mt19937_64 &rng) {
  const auto m = random_endomorphism_biased(mixed_group(), rng, 9, 0.5);
  const auto phi = canonical_blocks(m).phi;
  if (rational_determinant(real_part_matrix(phi.delta)) == 0)
    return {};
  const bool alpha_ok = aut_l1(phi.alpha);
  const bool q_ok = aut_l1(quasi_determinant_lca(m));
  const bool whole = is_automorphism(m);
  if (alpha_ok != q_ok || alpha_ok != whole)
    return "verdicts disagree for " + show(m);
  return {};
}

std::string nilpotent(std::mt19937_64 &rng) {
  const auto g = random_group(rng, 6, 12);
  const auto n = random_square_zero(g, rng, 9);
  const LcaCategory cat;
  const auto inv = one_plus_nilpotent_inverse(n, g, cat);
  const auto one = HomMatrix::identity(g);
  if (!((one + n) * inv == one) || !(inv * (one + n) == one))
    return "(1 + n)(1 - n) != 1 for " + show(n);
  return {};
}

std::string rank_invariance(std::mt19937_64 &rng) {
  const auto g = random_group(rng, 8, 12);
  std::vector<Block> shuffled(g.begin(), g.end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  if (canonical_decomposition(g).euclidean_rank !=
      canonical_decomposition(GroupExpr(shuffled)).euclidean_rank)
    return "euclidean rank changed under a permutation of " + g.to_string();
  return {};
}

Trial finite_oracle(OracleCaps caps) {
  return [caps](std::mt19937_64 &rng) -> std::string {
    std::vector<std::int64_t> moduli;
    std::uint64_t order = 1;
    const auto k = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < k; ++i) {
      const auto n = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
      if (order * static_cast<std::uint64_t>(n) > caps.evaluation)
        break;
      order *= static_cast<std::uint64_t>(n);
      moduli.push_back(n);
    }
    const auto f = finite_group(moduli);
    const auto e = random_hom(f, f, rng, 1);
    if (finite_automorphism_test(e) != brute_force_is_auto(e, caps))
      return "Smith-form test and brute force disagree on " + show(e);
    return {};
  };
}

} // namespace

std::vector<std::string_view> check_suites() {
  return {"condition-II", "ring-axioms", "homomorphism", "composition",
          "factorization", "inverse",    "criterion",    "finite-oracle",
          "nilpotent",    "rank"};
}

CheckReport run_check(std::string_view suite, std::uint64_t seed,
                      std::size_t trials, OracleCaps caps) {
  const std::map<std::string_view, Trial> table = {
      {"condition-II", condition_two},
      {"ring-axioms", ring_axioms},
      {"homomorphism", homomorphism},
      {"composition", composition_evaluation},
      {"factorization", factorization},
      {"inverse", inverse_check},
      {"criterion", criterion},
      {"finite-oracle", finite_oracle(caps)},
      {"nilpotent", nilpotent},
      {"rank", rank_invariance},
  };
  const auto it = table.find(suite);
  if (it == table.end())
    throw Error(ErrorKind::ValueError, "unknown check suite '" + std::string(suite) + "'");

  std::mt19937_64 rng(seed);
  CheckReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    auto failure = it->second(rng);
    if (!failure.empty()) {
      report.passed = false;
      report.counterexample = "trial " + std::to_string(t) + " (seed " +
                              std::to_string(seed) + "): " + failure;
      break;
    }
  }
  return report;
}

} // namespace lca
