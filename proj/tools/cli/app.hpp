#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hermitewave::cli {

/// Parses argv-style arguments (without the program name), runs the selected
/// subcommand and returns the process exit status. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& err);

}  // namespace hermitewave::cli
