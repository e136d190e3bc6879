#pragma once

#include <string>
#include <vector>

namespace atheory::cli {

enum class Status { ok, distinct, unknown, error };

struct CommandResult {
  Status status = Status::ok;
  std::string report;       // stdout
  std::string diagnostics;  // stderr: warnings and errors

  int exit_code() const;
};

/// Runs one subcommand. `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace atheory::cli
