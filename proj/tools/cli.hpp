#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace instanton::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 on invalid input, 1 on
/// internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace instanton::cli
