#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "numevent/tolerance.hpp"

namespace numevent::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNegative = 2,   // NOT_EMBEDDABLE, not Boolean, or a violated inequality
  kUndecided = 3,
};

enum class OutputFormat { kText, kJson };

struct RunConfig {
  double eps = kDefaultEps;
  std::string mode;
  std::string input_path;
  OutputFormat output_format = OutputFormat::kText;
  std::size_t budget = 1'000'000;
};

/// Runs the command line (without the program name). Reports go to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numevent::cli
