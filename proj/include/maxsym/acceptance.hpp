#pragma once

#include <vector>

#include "maxsym/config.hpp"

namespace maxsym {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string details;
  long long millis = 0;
};

struct AcceptanceReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// The verification suite: every check prints one pass/fail line through the
// CLI `verify` command, and the dedicated acceptance test binary runs the
// same report.
AcceptanceReport run_acceptance_suite(const RunConfig& config);

}  // namespace maxsym
