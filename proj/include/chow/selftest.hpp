#pragma once

#include <string>
#include <vector>

namespace chow {

struct GoldenResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Runs the golden corpus of reference values. Each case is evaluated
/// independently; an exception counts as a failure with its message as the
/// actual value.
std::vector<GoldenResult> run_selftest();

} // namespace chow
