#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klcells::cli {

enum ExitCode { kOk = 0, kUsage = 1, kTruncation = 2, kInvariant = 3 };

struct RunConfig {
  std::string verb;
  std::string type;
  std::string case_flag = "A";
  /// Comma separated p/q coordinates; "0" is the origin.
  std::string lambda = "0";
  std::string tau = "0";
  int max_len = 8;
  int clevel = 6;
  std::string out;
  /// Query file for the hecke verb.
  std::string expr;
  bool with_table = false;
};

struct RunResult {
  int status = kOk;
  /// JSON document (the artifact, or a structured error).
  std::string output;
};

RunResult run(const RunConfig& config);

/// Parses arguments, runs, writes the artifact to --out (atomically) or to out.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

std::vector<std::string> split_coordinates(const std::string& s);

}  // namespace klcells::cli
