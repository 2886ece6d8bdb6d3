#pragma once

#include <string>
#include <vector>

namespace algtype::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kUsageOrIo = 2,
  kResourceCap = 3,
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;  // one JSON document followed by '\n'
  std::string err;  // diagnostics
};

// Runs one subcommand. `args` excludes the program name:
//   equiv A.sig B.sig
//   recover A.sig --depth D [--max-terms N]
//   rank A.sig
//   support ALG.json --op NAME        (or an operation-table file, no --op)
//   clone ALG.json --basis M --depth D [--max-terms N]
//   homs A.json B.json [--list]
//   probe-free P.json [--pool DIR]
//   eval ALG.json --term TEXT --assign "x0=1,x1=0"
CommandResult run(const std::vector<std::string>& args);

}  // namespace algtype::cli
