#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wres::cli {

// Runs one subcommand invocation (args exclude the program name).
// Exit codes: 0 success / property holds; 1 property refuted or proof
// invalid; 2 usage or parameter error (budget included); 3 malformed input.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wres::cli
