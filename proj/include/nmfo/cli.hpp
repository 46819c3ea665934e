#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nmfo {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 on success / valid / pass / value 1, 1 on invalid /
/// counterexample / fail / value below 1 / unsafe, 2 on usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmfo
