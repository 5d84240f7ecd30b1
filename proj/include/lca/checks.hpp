#pragma once

// Seeded property suites run by `lcaut check`.

#include "lca/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lca {

struct CheckReport {
  bool passed = true;
  std::size_t trials = 0;
  /// Description of the first failing trial, empty when passed.
  std::string counterexample;
};

/// Names accepted by run_check.
std::vector<std::string_view> check_suites();

/// Throws Error(ValueError) for an unknown suite name.
CheckReport run_check(std::string_view suite, std::uint64_t seed,
                      std::size_t trials, OracleCaps caps = {});

} // namespace lca
