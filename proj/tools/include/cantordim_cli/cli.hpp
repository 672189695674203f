#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cantordim_cli/spec_io.hpp"

namespace cantordim::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kInputError = 2, kResourceLimit = 3 };

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;
  std::size_t depth = 32;
  std::size_t groups = 16;
  std::size_t scale = 0;
  unsigned precision = kDefaultPrecisionBits;
  std::size_t budget = kDefaultBudget;
  Format format = Format::Json;
  std::string out;
};

/// Result of one command: scalar fields, an optional table and the pass flag that decides the
/// exit code.
struct Report {
  json meta = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  bool passed = true;
};

void write_report(const Report& r, Format format, std::ostream& out);

/// Runs one invocation; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cantordim::cli
