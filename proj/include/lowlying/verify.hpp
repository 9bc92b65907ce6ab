#pragma once

// Invariant suites: each check compares two independent routes (formula vs
// enumeration, recursion vs Mobius inversion, ...) and names a witness on failure.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowlying/numeric.hpp"

namespace lowlying {

enum class Suite { binwords, counting, enumerate, geometry, all };

std::optional<Suite> parse_suite(std::string_view name) noexcept;

struct VerifyOptions {
  /// Largest word length for exhaustive checks (each check also has its own cap).
  int tmax = 12;
  /// Largest length enumerated when cross-checking formulas.
  int oracle_max = 16;
  unsigned threads = 1;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  /// Witness on failure, measurement on success.
  std::string detail;
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options = {});

/// (1/tau) sum_{d | tau} mu(d) 2^{tau/d}; independent of the divisor recursion.
BigInt mobius_primitive_count(int tau);

}  // namespace lowlying
