#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "resdiff/polynomial.hpp"

namespace resdiff::cli {

enum ExitCode : int { kOk = 0, kNotCertified = 1, kUsage = 2 };

struct Outcome {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// "1,-3,0,4" or "1/2,-3/4": descending coefficients. Throws ParseError.
Polynomial parse_poly_arg(std::string_view text);

/// "r:m,r:m,...[@c]": roots with multiplicities and optional leading
/// coefficient (default 1). Throws ParseError.
RootSpec parse_roots_arg(std::string_view text);

/// Runs one command line (without the program name) and captures output.
Outcome run(const std::vector<std::string>& args);

}  // namespace resdiff::cli
