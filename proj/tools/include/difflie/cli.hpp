#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace difflie::cli {

// Runs one command line (args excludes the program name). Returns the exit
// status; normal output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace difflie::cli
