#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "affine_heaps/series.hpp"

namespace affheaps {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  // Informational checks are reported but do not decide the suite verdict.
  bool informational = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  int n_max = 6;
  int len_max = 12;
  int jobs = 1;
  std::uint64_t seed = 20240601;
};

const std::vector<std::string>& suite_ids();
// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(std::string_view id, const VerifyOptions& opts = {});

// Coefficientwise comparison on the common box, naming the first difference.
CheckResult compare_series(std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs);

std::string format_report(const SuiteReport& r);

}  // namespace affheaps
