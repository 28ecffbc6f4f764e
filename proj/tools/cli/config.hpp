#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qwalk/analysis.hpp"

namespace qwalk::cli {

enum class Command { evolve, entropy_table, sweep, trace_distance, variance, tomography, verify };

enum class Format { csv, json };

struct RunConfig {
    Command command = Command::entropy_table;
    double theta = 1.5707963267948966;  // pi/2
    double phi = 0.7853981633974483;    // pi/4
    int steps = 11;
    int theta_points = 101;
    int phi_points = 101;
    double n0 = 1e6;
    double loss_db = 0.0;
    std::uint64_t seed = 1;
    int seeds = 100;
    int fit_min = 10;
    int fit_max = 1000;
    analysis::Parity parity = analysis::Parity::all;
    std::string output = "-";
    Format format = Format::csv;
    bool plot = false;
    bool header = true;
    int threads = 0;  // 0: OpenMP default
};

// Invalid configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error("invalid '" + field + "': " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

std::string_view command_name(Command c);
std::optional<Command> parse_command(std::string_view name);

// Radians, or a multiple/fraction of pi: "pi", "pi/2", "3pi/2", "3*pi/4", "-pi/4", "0.5pi".
std::optional<double> parse_angle(std::string_view text);

// Flat key=value lines; '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> load_config_file(const std::string& path);

// Applies one key/value to the config; throws ConfigError on unknown keys or
// unparsable values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

// Range checks that depend on the command; throws ConfigError.
void validate(const RunConfig& config);

}  // namespace qwalk::cli
