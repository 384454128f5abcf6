#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace octfactor::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,           // anything not listed below, including failed `verify` reports
  kParseError = 2,        // malformed input or usage
  kNotDecomposable = 3,   // companion does not split into class quadratics
  kNoRoot = 4,            // NotARoot, NoRootInClass, EqualRoots, WitnessNotFound
  kZeroDivisor = 5,
  kInternalFailure = 6,   // a self-check of the engine failed
};

int exit_code_for(const std::exception& e);

/// Runs the command line `args` (without the program name). Reads the
/// polynomial argument from `in` when it is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace octfactor::cli
