#pragma once

#include <ostream>

#include "cli/config.hpp"

namespace qwalk::cli {

// Runs one validated configuration.  Results go to config.output ("-" is
// `out`); diagnostics go to `err`.  Returns the process exit status: 0 on
// success, 1 on runtime failure (including a failed `verify`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Where --plot writes its SVG: the output path with its extension replaced,
// or "<command>.svg" when writing to stdout.
std::string plot_path(const RunConfig& config);

// Path of the trace-distance fit sidecar for CSV output to a file.
std::string fit_sidecar_path(const RunConfig& config);

}  // namespace qwalk::cli
