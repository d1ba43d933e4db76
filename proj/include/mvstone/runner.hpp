#pragma once

#include "mvstone/specdoc.hpp"

namespace mvstone {

struct RunOptions {
  unsigned long long seed = 0;            // echoed for reproducibility
  size_t bound = kIdealEnumerationCap;    // enumeration cap
};

struct CheckResult {
  std::string command;
  std::string args;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> details;  // ordered
};

struct Report {
  RunOptions options;
  std::vector<CheckResult> results;

  size_t failures() const;
  /// Stable line-oriented key=value rendering; byte-identical across runs.
  std::string to_kv() const;
  std::string to_text() const;
};

/// Executes the checks in declaration order. ResourceLimitError propagates
/// (distinct exit status); other errors fail the individual check.
Report run_document(const SpecDocument& doc, const RunOptions& opts);

}  // namespace mvstone
