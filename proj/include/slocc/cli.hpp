#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slocc::cli {

/// Process exit codes; stable, documented in README.md.
enum ExitCode : int {
  kOk = 0,
  kNo = 1,              // negative answer: convertible NO, invariance failures
  kUsage = 2,           // bad command line
  kIo = 3,              // file cannot be read or written
  kParse = 4,           // malformed state / operation / point file
  kFormat = 5,          // wrong or unsupported format for the subcommand
  kPolygon = 6,         // hyperdeterminant does not exist for the format
  kNotImplemented = 7,  // hyperdeterminant exists, no engine
  kDomain = 8,          // zero state, non-critical point, singular operation, unknown class
  kInternal = 9,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slocc::cli
