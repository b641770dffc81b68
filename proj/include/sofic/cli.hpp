#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

#include "sofic/report.hpp"

namespace sofic {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // a property or verification check failed
  kExitInvalidInput = 2,
  kExitLimit = 3,        // a budget or size cap was reached
};

int exit_code_for(const std::exception& e);

// Runs the tool with args[0] as the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

// The fixture run behind `verify-paper`.
RunReport paper_fixture_report(std::size_t max_period = 6, std::size_t window = 12, std::size_t tail_bound = 8);

}  // namespace sofic
