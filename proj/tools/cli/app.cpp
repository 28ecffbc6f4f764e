#include "cli/app.hpp"

#include <map>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace qwalk::cli {

namespace {

constexpr const char* kSettingKeys[] = {"theta",    "phi",     "steps",  "theta-points", "phi-points",
                                        "n0",       "loss-db", "seed",   "seeds",        "fit-min",
                                        "fit-max",  "parity",  "output", "format",       "threads"};

const std::map<std::string, std::string> kSettingHelp = {
    {"theta", "initial coin phase (radians or pi expression, e.g. pi/2)"},
    {"phi", "phase of the defect coin at x = 0"},
    {"steps", "number of walk steps t"},
    {"theta-points", "theta grid size for sweep"},
    {"phi-points", "phi grid size for sweep"},
    {"n0", "mean photon number per basis before loss (tomography)"},
    {"loss-db", "loss in dB per step (tomography)"},
    {"seed", "first RNG seed (tomography)"},
    {"seeds", "number of seeds (tomography)"},
    {"fit-min", "first step of the power-law fit window"},
    {"fit-max", "last step of the power-law fit window"},
    {"parity", "steps used by the fit: all, even or odd"},
    {"output", "output file, '-' for stdout"},
    {"format", "csv or json"},
    {"threads", "OpenMP thread count, 0 for the runtime default"},
};

const std::map<Command, std::string> kCommandHelp = {
    {Command::evolve, "amplitudes and position distribution after `steps` steps"},
    {Command::entropy_table, "entanglement entropy for t = 1..steps"},
    {Command::sweep, "entropy over a (theta, phi) grid at t = steps"},
    {Command::trace_distance, "trace distance between consecutive coin states, with power-law fit"},
    {Command::variance, "position variance of the defect, Hadamard and classical walks"},
    {Command::tomography, "simulated photon-counting tomography of the coin state"},
    {Command::verify, "built-in self-checks of the walk engine"},
};

}  // namespace

ParseOutcome parse_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete-time quantum walk with a single phase-defect coin"};
    app.name("qwalk");
    app.require_subcommand(0, 1);

    std::map<std::string, std::string> flag_values;
    for (const char* key : kSettingKeys)
        app.add_option(std::string("--") + key, flag_values[key], kSettingHelp.at(key));
    bool plot = false, no_header = false;
    std::string config_path;
    app.add_flag("--plot", plot, "also write an SVG plot next to the output");
    app.add_flag("--no-header", no_header, "omit the metadata line / timestamp");
    app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);

    std::map<Command, CLI::App*> subs;
    for (const auto& [cmd, help] : kCommandHelp) {
        auto* sub = app.add_subcommand(std::string(command_name(cmd)), help);
        sub->fallthrough();
        subs[cmd] = sub;
    }

    // CLI11 wants argv order reversed when taking a vector
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return {std::nullopt, 0};
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return {std::nullopt, 0};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return {std::nullopt, 2};
    }

    try {
        RunConfig config;
        bool have_command = false;
        if (!config_path.empty()) {
            for (const auto& [key, value] : load_config_file(config_path)) {
                apply_setting(config, key, value);
                if (key == "command") have_command = true;
            }
        }
        for (const char* key : kSettingKeys)
            if (app.count(std::string("--") + key) > 0) apply_setting(config, key, flag_values[key]);
        if (plot) config.plot = true;
        if (no_header) config.header = false;
        for (const auto& [cmd, sub] : subs) {
            if (sub->parsed()) {
                config.command = cmd;
                have_command = true;
            }
        }
        if (!have_command) throw ConfigError("command", "no command given (see --help)");
        validate(config);
        return {config, 0};
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return {std::nullopt, 2};
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return {std::nullopt, 2};
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParseOutcome parsed = parse_command_line(args, out, err);
    if (!parsed.config) return parsed.exit_code;
    return run(*parsed.config, out, err);
}

}  // namespace qwalk::cli
