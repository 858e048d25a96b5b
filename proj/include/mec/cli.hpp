#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mec::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kParseError = 2,
  kInvalidGraph = 3,
  kIoError = 4,
};

/// Runs one `mecsize` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mec::cli
