#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gwsum {

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the invariant suite of every module, printing one "PASS"/"FAIL" line per
// property to `log` (if given). Stops at the first failure unless
// keep_going is set.
std::vector<PropertyResult> run_selftest(std::ostream* log, bool keep_going = false,
                                         std::uint64_t seed = 20260417);

}  // namespace gwsum
