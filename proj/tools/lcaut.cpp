// lcaut: exact automorphism computations for elementary LCA groups.

#include "lca/checks.hpp"
#include "lca/decomposition.hpp"
#include "lca/document.hpp"
#include "lca/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2 };

std::string read_input(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw lca::Error(lca::ErrorKind::ValueError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

lca::HomMatrix read_morphism(const std::string &path) {
  return lca::parse_morphism_document(read_input(path));
}

lca::HomMatrix read_endomorphism(const std::string &path) {
  auto m = read_morphism(path);
  if (!m.is_endomorphism())
    throw lca::Error(lca::ErrorKind::DomainMismatch,
                     "domain " + m.domain().to_string() + " != codomain " +
                         m.codomain().to_string());
  return m;
}

std::string render(const lca::HomMatrix &m, const std::string &format) {
  return format == "pretty" ? lca::pretty_morphism(m) : lca::serialize_morphism(m);
}

std::string join_indices(const std::vector<std::size_t> &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact endomorphism and automorphism computations for "
               "elementary LCA groups (sums of R, Z, T and Z/n)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t cap = lca::OracleCaps{}.evaluation;
  std::string format = "document";
  app.add_option("--seed", seed, "Seed for property checks");
  app.add_option("--trials", trials, "Number of trials for property checks");
  app.add_option("--cap", cap, "Largest finite group evaluated by brute force");
  app.add_option("--format", format, "Matrix output format")
      ->check(CLI::IsMember({"pretty", "document"}));

  std::string text;
  std::string morphism_path;
  std::string second;

  auto *parse = app.add_subcommand("parse", "Canonicalize a group expression or a morphism document");
  parse->add_option("group", text, "Group expression, e.g. \"Z^2 + T + R\"");
  parse->add_option("-m,--morphism", morphism_path, "Morphism document ('-' for stdin)");

  auto *hom = app.add_subcommand("hom", "Print the hom-group grid Hom(domain, codomain)");
  hom->add_option("domain", text)->required();
  hom->add_option("codomain", second)->required();

  auto *is_auto = app.add_subcommand("is-auto", "Decide whether an endomorphism is an automorphism");
  is_auto->add_option("file", morphism_path)->required();

  auto *inverse = app.add_subcommand("inverse", "Exact inverse of an automorphism");
  inverse->add_option("file", morphism_path)->required();

  auto *qdet = app.add_subcommand("qdet", "Quasi-determinant over L1");
  qdet->add_option("file", morphism_path)->required();

  auto *factor = app.add_subcommand("factor", "Four-factor decomposition");
  factor->add_option("file", morphism_path)->required();

  auto *decompose = app.add_subcommand("decompose", "Split L = L1 + R^n");
  decompose->add_option("group", text)->required();

  std::string suite;
  auto *check = app.add_subcommand("check", "Run a seeded property suite");
  check->add_option("suite", suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*parse) {
      if (!morphism_path.empty()) {
        std::cout << render(read_morphism(morphism_path), format);
      } else {
        std::cout << lca::parse_group(text).to_string() << "\n";
      }
      return kOk;
    }
    if (*hom) {
      std::cout << lca::hom_grid(lca::parse_group(text), lca::parse_group(second));
      return kOk;
    }
    if (*decompose) {
      const auto cert = lca::canonical_decomposition(lca::parse_group(text));
      std::cout << "L1 = " << cert.l1.to_string() << ", n = " << cert.euclidean_rank
                << ", perm = " << join_indices(cert.permutation) << "\n";
      return kOk;
    }
    if (*is_auto) {
      const auto verdict = lca::automorphism_verdict(read_endomorphism(morphism_path));
      if (verdict) {
        std::cout << "automorphism\n";
        return kOk;
      }
      std::cout << "not an automorphism: " << verdict.reason() << "\n";
      return kNegative;
    }
    if (*inverse) {
      const auto m = read_endomorphism(morphism_path);
      const auto verdict = lca::automorphism_verdict(m);
      if (!verdict) {
        std::cerr << "not an automorphism: " << verdict.reason() << "\n";
        return kNegative;
      }
      std::cout << render(lca::inverse(m), format);
      return kOk;
    }
    if (*qdet) {
      const auto m = read_endomorphism(morphism_path);
      try {
        std::cout << render(lca::quasi_determinant_lca(m), format);
      } catch (const lca::Error &e) {
        if (e.kind() != lca::ErrorKind::DeltaNotInvertible)
          throw;
        std::cerr << "delta is not invertible: R-part determinant 0\n";
        return kNegative;
      }
      return kOk;
    }
    if (*factor) {
      const auto m = read_endomorphism(morphism_path);
      const auto [cert, phi] = lca::canonical_blocks(m);
      const lca::LcaCategory cat;
      lca::Factorization<lca::LcaCategory> f;
      try {
        f = lca::factorize(phi, cat);
      } catch (const lca::Error &e) {
        if (e.kind() != lca::ErrorKind::DeltaNotInvertible)
          throw;
        std::cerr << "delta is not invertible: R-part determinant 0\n";
        return kNegative;
      }
      std::vector<lca::HomMatrix> factors;
      for (const auto *b : {&f.scale_c, &f.upper, &f.scale_b, &f.lower})
        factors.push_back(lca::unconjugate_by_permutation(lca::join_block2(*b), cert));
      if (!(factors[0] * factors[1] * factors[2] * factors[3] == m)) {
        std::cerr << "internal error: factor product does not reproduce the input\n";
        return kNegative;
      }
      for (std::size_t i = 0; i < factors.size(); ++i)
        std::cout << (i ? "---\n" : "") << render(factors[i], format);
      return kOk;
    }
    if (*check) {
      lca::OracleCaps caps;
      caps.evaluation = cap;
      const auto report = lca::run_check(suite, seed, trials, caps);
      if (report.passed) {
        std::cout << "check " << suite << ": passed (" << report.trials << " trials)\n";
        return kOk;
      }
      std::cout << "check " << suite << ": FAILED " << report.counterexample << "\n";
      return kNegative;
    }
  } catch (const lca::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
