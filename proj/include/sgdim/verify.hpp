#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sgdim::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suites: "tz", "elkind", "codes", "bounds". Throws InvalidInput for others.
std::vector<CheckResult> run_suite(std::string_view suite);
const std::vector<std::string>& suite_names();

/// The sixteen words of the classic [8,4] listing, text form.
const std::vector<std::string>& hamming84_listing();

}  // namespace sgdim::verify
