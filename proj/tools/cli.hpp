#pragma once

#include <string>
#include <vector>

namespace pdw::cli {

/// Exit code plus the full report text. Machine-readable key=value lines
/// follow a "---" separator at the end of the report.
struct CommandResult {
    int exit_code = 0;
    std::string report;
};

// Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
// 3 resource-bound exhaustion.
CommandResult run_command(const std::vector<std::string>& argv);

} // namespace pdw::cli
