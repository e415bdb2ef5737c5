#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlc/cli/json_io.hpp"

namespace qlc::cli {

/// One command invocation. Options hold the flag values by long name
/// ("pencil", "symbol", ...); boolean flags map to "true".
struct Job {
  std::string command;     // segre, classify, ..., corpus
  std::string subcommand;  // quadric | quartic for stability
  std::map<std::string, std::string> options;
  std::string output_format = "json";
  std::string output_path;  // optional copy of the document
};

struct RunResult {
  int status = 0;  // 0 ok, 1 input/validation error, 2 mathematical degeneracy
  json document;
};

/// Parses command-line arguments (without the program name) into a Job.
/// Throws qlc::Error with code "cli.usage" on bad usage; `help` receives the
/// help text when --help is requested.
Job parse_args(const std::vector<std::string>& args, std::string* help = nullptr);

/// Executes a job. Never throws: errors become {"error": {"code", "message"}}.
RunResult run(const Job& job);

/// Renders a result document in the requested format.
std::string render(const json& doc, const std::string& format);

/// Entry point used by the executable.
int main_entry(int argc, char** argv);

}  // namespace qlc::cli
