#pragma once

#include <string>
#include <vector>

#include "modgen/json_io.hpp"

namespace modgen {

// Runs one CLI command (args exclude the program name) and returns the exit
// code, the structured report, and the rendered output for stdout.
// Exit codes: 0 success / verified, 1 verification failure (`check` only),
// 2 input error, 3 resource cutoff.
struct CliResult {
  int code = 0;
  ojson report;
  std::string output;
};

CliResult run_command(const std::vector<std::string>& args);

}  // namespace modgen
