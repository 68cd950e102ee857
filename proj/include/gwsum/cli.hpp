#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gwsum/contact.hpp"
#include "gwsum/sumformula.hpp"

namespace gwsum::cli {

enum class ExitCode : int { Ok = 0, Usage = 1, SelfTestFailure = 2 };

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;  // severi | irreducible | kontsevich | elliptic | convolve | selftest
  int max_degree = 4;
  int max_delta = 3;
  int order = 10;
  Format format = Format::Json;
  // convolve: X.json Y.json, or X.json S.json Y.json
  std::vector<std::string> input_paths;
  bool invert_smatrix = false;
  Truncation trunc;
  // severi: explicit tangency profile (both or neither)
  std::optional<ContactMultiIndex> alpha;
  std::optional<ContactMultiIndex> beta;
};

// Throws Error(InvalidArgument) describing the first violated bound.
void validate(const RunConfig& cfg);

// Dispatches a validated config. Diagnostics go to `err`.
ExitCode run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv with CLI11, validates and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwsum::cli
