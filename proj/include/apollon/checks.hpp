#pragma once

// Named invariant suites behind the `check` subcommand: oracle agreement,
// projection coincidence, Hermitian determinants, tangency audits, and the
// density sanity band (warning tier).

#include "apollon/core.hpp"

#include <string>
#include <vector>

namespace apollon {

struct CheckItem {
  std::string name;
  bool passed{false};
  bool warn_only{false};
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  // warning-tier items do not gate
  bool all_passed() const {
    for (const CheckItem& it : items)
      if (!it.passed && !it.warn_only) return false;
    return true;
  }
};

// inject_fault: name of an invariant to corrupt (test hook for the
// failure-reporting path); empty for normal operation.
CheckReport run_self_checks(const Int& bmax, const std::string& inject_fault = "");

}  // namespace apollon
