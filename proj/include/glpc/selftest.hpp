#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glpc {

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;           // e.g. "364/364 rejected"
  double millis = 0.0;
  double max_case_millis = 0.0;  // slowest single case, where meaningful

  bool passed() const { return failures == 0 && checks > 0; }
};

/// Suite names in canonical order: ordinal, setcode, gl-agreement, axioms,
/// fact1, schemas, qbf-roundtrip.
const std::vector<std::string>& suite_names();

/// Runs one property suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteReport> run_all_suites(std::uint64_t seed);

}  // namespace glpc
