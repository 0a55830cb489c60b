#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "zigzag_app/config.hpp"

namespace zigzag::app {

enum ExitCode : int {
  exit_ok = 0,
  exit_validation_failed = 1,
  exit_config_error = 2,
  exit_domain_error = 3,
};

enum class Command { modes, sweep, noise, range, validate };

std::optional<Command> parse_command(std::string_view name);

/// Writes the command's data to `out` in config.format and human-readable
/// progress to `log`. Library exceptions propagate; see run_guarded.
int run_command(Command command, const RunConfig& config, std::ostream& out, std::ostream& log);

/// run_command with every error path mapped to its exit code; messages go to `log`.
int run_guarded(Command command, const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace zigzag::app
