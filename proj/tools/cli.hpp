#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symtri::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symtri::cli
