#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coheyt {

// command-line front end; returns the process exit code
// (0 success / membership true, 1 membership false or absent, 2 input error)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}
