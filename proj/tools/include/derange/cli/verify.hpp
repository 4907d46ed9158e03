#pragma once

// Exhaustive self-checks of the engine, grouped into suites. Each case
// records what was compared; the CLI prints the reports as JSON.

#include <string>
#include <vector>

#include "json.hpp"

namespace derange::cli {

enum class CaseStatus { pass, fail, skipped_exception };

std::string to_string(CaseStatus status);

struct VerifyCase {
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json actual;
  CaseStatus status = CaseStatus::pass;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;

  std::size_t count(CaseStatus status) const;
  bool passed() const { return count(CaseStatus::fail) == 0; }
  nlohmann::json to_json() const;
};

/// perm, series, counting, lambda, euler, correlation.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_suite(const std::string& name, int n_max);

/// Every ordered pair of compositions of n with its preimage counts.
nlohmann::json correlation_pairs(int n, bool& passed);

}  // namespace derange::cli
