#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kodaira {

enum ExitCode { kExitOk = 0, kExitMismatch = 2, kExitInput = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace kodaira
