#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hos::cli {

/// Runs one command line (without the program name). Exit code 0 when every check
/// passes, 1 when a verification check fails, 2 on usage, parse or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hos::cli
