#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathvar::cli {

struct CommandInfo {
  std::string group;
  std::string name;
  std::string summary;
  std::vector<std::string> inputs;      // positional JSON files ("-" reads stdin)
  std::vector<std::string> flags;       // long option names without dashes
  std::vector<std::string> operations;  // library operations the command reaches
};

const std::vector<CommandInfo>& command_table();

/// Runs one command. `args` excludes the program name. Returns the exit code:
/// 0 on success, 2 on a usage or validation error, 1 on an internal error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pathvar::cli
