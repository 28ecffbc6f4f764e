#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"

namespace qwalk::cli {

struct ParseOutcome {
    std::optional<RunConfig> config;  // empty when the process should exit now
    int exit_code = 0;
};

// Defaults, then --config FILE, then flags given on the command line.
// Help exits 0; bad arguments exit 2 with a message naming the field.
ParseOutcome parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parse and run; returns the process exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
