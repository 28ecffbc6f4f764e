#include "cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

namespace qwalk::cli {

namespace {

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::evolve, "evolve"},         {Command::entropy_table, "entropy-table"},
    {Command::sweep, "sweep"},           {Command::trace_distance, "trace-distance"},
    {Command::variance, "variance"},     {Command::tomography, "tomography"},
    {Command::verify, "verify"},
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::optional<double> parse_double(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& value) {
    const std::string s = trim(value);
    Int out{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError(key, "expected an integer, got '" + value + "'");
    }
    return out;
}

double parse_real(const std::string& key, const std::string& value) {
    if (auto v = parse_double(value)) return *v;
    throw ConfigError(key, "expected a number, got '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
    std::string s = trim(value);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw ConfigError(key, "expected true/false, got '" + value + "'");
}

}  // namespace

std::string_view command_name(Command c) {
    for (const auto& [cmd, name] : kCommands)
        if (cmd == c) return name;
    return "?";
}

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [cmd, n] : kCommands)
        if (n == name) return cmd;
    return std::nullopt;
}

std::optional<double> parse_angle(std::string_view text) {
    const std::string s = trim(text);
    static const std::regex pi_form(R"(^([+-]?)(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?$)",
                                    std::regex::icase);
    std::smatch m;
    if (std::regex_match(s, m, pi_form)) {
        double factor = 1.0;
        if (m[2].length() > 0) {
            auto f = parse_double(m[2].str());
            if (!f) return std::nullopt;
            factor = *f;
        }
        double divisor = 1.0;
        if (m[3].matched) {
            auto d = parse_double(m[3].str());
            if (!d || *d == 0.0) return std::nullopt;
            divisor = *d;
        }
        const double sign = m[1].str() == "-" ? -1.0 : 1.0;
        return sign * factor * std::numbers::pi / divisor;
    }
    return parse_double(s);
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config", "line " + std::to_string(lineno) + " is not key=value");
        }
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        if (key.empty()) throw ConfigError("config", "line " + std::to_string(lineno) + " has an empty key");
        out[key] = trim(std::string_view(body).substr(eq + 1));
    }
    return out;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    if (key == "command") {
        auto cmd = parse_command(trim(value));
        if (!cmd) throw ConfigError(key, "unknown command '" + value + "'");
        c.command = *cmd;
    } else if (key == "theta" || key == "phi") {
        auto a = parse_angle(value);
        if (!a) throw ConfigError(key, "expected an angle in radians or a pi expression, got '" + value + "'");
        (key == "theta" ? c.theta : c.phi) = *a;
    } else if (key == "steps") {
        c.steps = parse_int<int>(key, value);
    } else if (key == "theta-points") {
        c.theta_points = parse_int<int>(key, value);
    } else if (key == "phi-points") {
        c.phi_points = parse_int<int>(key, value);
    } else if (key == "n0") {
        c.n0 = parse_real(key, value);
    } else if (key == "loss-db") {
        c.loss_db = parse_real(key, value);
    } else if (key == "seed") {
        c.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "seeds") {
        c.seeds = parse_int<int>(key, value);
    } else if (key == "fit-min") {
        c.fit_min = parse_int<int>(key, value);
    } else if (key == "fit-max") {
        c.fit_max = parse_int<int>(key, value);
    } else if (key == "parity") {
        const std::string v = trim(value);
        if (v == "all") c.parity = analysis::Parity::all;
        else if (v == "even") c.parity = analysis::Parity::even;
        else if (v == "odd") c.parity = analysis::Parity::odd;
        else throw ConfigError(key, "expected all, even or odd, got '" + value + "'");
    } else if (key == "output") {
        c.output = trim(value);
        if (c.output.empty()) throw ConfigError(key, "empty path");
    } else if (key == "format") {
        const std::string v = trim(value);
        if (v == "csv") c.format = Format::csv;
        else if (v == "json") c.format = Format::json;
        else throw ConfigError(key, "expected csv or json, got '" + value + "'");
    } else if (key == "plot") {
        c.plot = parse_bool(key, value);
    } else if (key == "header") {
        c.header = parse_bool(key, value);
    } else if (key == "threads") {
        c.threads = parse_int<int>(key, value);
    } else {
        throw ConfigError(key, "unknown setting");
    }
}

void validate(const RunConfig& c) {
    int min_steps = 0;
    switch (c.command) {
        case Command::entropy_table:
        case Command::variance:
        case Command::tomography:
        case Command::sweep: min_steps = 1; break;
        case Command::trace_distance: min_steps = 2; break;
        case Command::evolve:
        case Command::verify: min_steps = 0; break;
    }
    if (c.steps < min_steps) {
        throw ConfigError("steps", "must be >= " + std::to_string(min_steps) + " for " +
                                       std::string(command_name(c.command)));
    }
    if (c.theta_points < 1) throw ConfigError("theta-points", "must be >= 1");
    if (c.phi_points < 1) throw ConfigError("phi-points", "must be >= 1");
    if (c.command == Command::tomography) {
        if (!(c.n0 > 0.0)) throw ConfigError("n0", "must be > 0");
        if (!(c.loss_db >= 0.0)) throw ConfigError("loss-db", "must be >= 0");
        if (c.seeds < 1) throw ConfigError("seeds", "must be >= 1");
    }
    if (c.fit_min < 1) throw ConfigError("fit-min", "must be >= 1");
    if (c.fit_max < c.fit_min) throw ConfigError("fit-max", "must be >= fit-min");
    if (c.threads < 0) throw ConfigError("threads", "must be >= 0");
}

}  // namespace qwalk::cli
