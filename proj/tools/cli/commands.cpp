#include "cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include "cli/output.hpp"
#include "cli/svg.hpp"
#include "qwalk/analysis.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/expsim.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/verify.hpp"

namespace qwalk::cli {

namespace {

using Plot = std::variant<svg::LinePlot, svg::Heatmap>;

struct Report {
    Table table;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    std::optional<Plot> plot;
    bool failed = false;
};

std::vector<double> to_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::string_view parity_name(analysis::Parity p) {
    switch (p) {
        case analysis::Parity::even: return "even";
        case analysis::Parity::odd: return "odd";
        case analysis::Parity::all: break;
    }
    return "all";
}

nlohmann::ordered_json parameters(const RunConfig& c) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    if (c.command == Command::verify) return p;
    p["theta"] = c.theta;
    p["phi"] = c.phi;
    p["steps"] = c.steps;
    switch (c.command) {
        case Command::sweep:
            p["theta_points"] = c.theta_points;
            p["phi_points"] = c.phi_points;
            break;
        case Command::trace_distance:
            p["fit_min"] = c.fit_min;
            p["fit_max"] = c.fit_max;
            p["parity"] = parity_name(c.parity);
            break;
        case Command::tomography:
            p["n0"] = c.n0;
            p["loss_db"] = c.loss_db;
            p["seed"] = c.seed;
            p["seeds"] = c.seeds;
            break;
        default: break;
    }
    return p;
}

std::string metadata_line(const RunConfig& c) {
    std::ostringstream os;
    os << "qwalk " << command_name(c.command);
    const auto params = parameters(c);
    for (const auto& [k, v] : params.items()) os << ' ' << k << '=' << v.dump();
    os << " generated=" << utc_timestamp();
    return os.str();
}

Report run_evolve(const RunConfig& c) {
    const WalkState s = evolve(balanced_initial_state(c.theta), iqw_coin_map(c.phi), c.steps);
    Report r;
    r.table.columns = {"x", "prob", "re_a", "im_a", "re_b", "im_b"};
    svg::Line line{{}, {}, "P(x)"};
    // every x in [-t, t], wrong-parity sites included as zeros
    for (int x = -s.t(); x <= s.t(); ++x) {
        const Amplitude a = s.amplitude(x, CoinBasis::zero), b = s.amplitude(x, CoinBasis::one);
        const double p = std::norm(a) + std::norm(b);
        r.table.rows.push_back({(long long)x, p, a.real(), a.imag(), b.real(), b.imag()});
        line.x.push_back(x);
        line.y.push_back(p);
    }
    r.plot = svg::LinePlot{"Position distribution at t = " + std::to_string(s.t()), "x", "P(x)", false, false, {line}};
    return r;
}

Report run_entropy_table(const RunConfig& c) {
    const analysis::Series e = analysis::entropy_curve(c.steps, c.theta, c.phi);
    Report r;
    r.table.columns = {"t", "entropy"};
    for (std::size_t i = 0; i < e.size(); ++i) r.table.rows.push_back({(long long)e.t_values[i], e.y_values[i]});
    r.plot = svg::LinePlot{"Coin-walker entanglement entropy", "t", "E", false, false,
                           {{to_doubles(e.t_values), e.y_values, "E(t)"}}};
    return r;
}

Report run_sweep(const RunConfig& c) {
    const analysis::SweepGrid g = analysis::entropy_sweep(c.steps, analysis::uniform_angles(c.theta_points),
                                                          analysis::uniform_angles(c.phi_points));
    Report r;
    r.table.columns = {"theta", "phi", "entropy"};
    for (std::size_t i = 0; i < g.theta_values.size(); ++i)
        for (std::size_t j = 0; j < g.phi_values.size(); ++j)
            r.table.rows.push_back({g.theta_values[i], g.phi_values[j], g.entropy[i][j]});
    // rows of the heatmap follow phi (vertical axis), columns theta
    std::vector<std::vector<double>> z(g.phi_values.size(), std::vector<double>(g.theta_values.size()));
    for (std::size_t i = 0; i < g.theta_values.size(); ++i)
        for (std::size_t j = 0; j < g.phi_values.size(); ++j) z[j][i] = g.entropy[i][j];
    r.plot = svg::Heatmap{"Entropy at t = " + std::to_string(c.steps), "theta", "phi", g.theta_values,
                          g.phi_values, std::move(z), 0.0, 1.0};
    return r;
}

Report run_trace_distance(const RunConfig& c) {
    const analysis::Series d = analysis::trace_distance_series(c.steps, c.theta, c.phi);
    Report r;
    r.table.columns = {"t", "D"};
    for (std::size_t i = 0; i < d.size(); ++i) r.table.rows.push_back({(long long)d.t_values[i], d.y_values[i]});

    nlohmann::ordered_json fit_json;
    const int hi = std::min(c.fit_max, c.steps);
    fit_json["t_min"] = c.fit_min;
    fit_json["t_max"] = hi;
    fit_json["parity"] = parity_name(c.parity);
    svg::LinePlot plot{"Trace distance between neighbouring coin states", "t", "D(t)", true, true,
                       {{to_doubles(d.t_values), d.y_values, "D(t)"}}};
    try {
        const auto fit = analysis::fit_power_law(analysis::filter_parity(d, c.parity), c.fit_min, hi);
        fit_json["exponent"] = fit.exponent;
        fit_json["amplitude"] = fit.amplitude;
        fit_json["r_squared"] = fit.r_squared;
        fit_json["points"] = fit.points;
        svg::Line fitted{{}, {}, "fit t^" + format_real(std::round(fit.exponent * 1000) / 1000), "#d62728", true};
        for (int t = c.fit_min; t <= hi; ++t) {
            fitted.x.push_back(t);
            fitted.y.push_back(fit.amplitude * std::pow(static_cast<double>(t), fit.exponent));
        }
        plot.lines.push_back(std::move(fitted));
    } catch (const Error& e) {
        fit_json["error"] = e.what();
    }
    r.extra["fit"] = std::move(fit_json);
    r.plot = std::move(plot);
    return r;
}

Report run_variance(const RunConfig& c) {
    const analysis::Series iqw = analysis::variance_series(c.steps, c.theta, c.phi);
    const analysis::Series hqw = analysis::variance_series(c.steps, c.theta, 0.0);
    const analysis::Series crw = analysis::crw_variance_series(c.steps);
    Report r;
    r.table.columns = {"t", "variance", "walk_type"};
    for (const auto& [series, name] : {std::pair{&iqw, "iqw"}, std::pair{&hqw, "hqw"}, std::pair{&crw, "crw"}})
        for (std::size_t i = 0; i < series->size(); ++i)
            r.table.rows.push_back({(long long)series->t_values[i], series->y_values[i], std::string(name)});
    r.plot = svg::LinePlot{"Position variance", "t", "variance", false, false,
                           {{to_doubles(iqw.t_values), iqw.y_values, "IQW", "#000000"},
                            {to_doubles(hqw.t_values), hqw.y_values, "HQW", "#d62728", true},
                            {to_doubles(crw.t_values), crw.y_values, "CRW", "#1f77b4", true}}};
    return r;
}

Report run_tomography(const RunConfig& c, std::ostream& err) {
    Report r;
    r.table.columns = {"t", "entropy_mean", "entropy_std", "fidelity_mean"};
    svg::Line mean{{}, {}, "reconstructed (mean)", "#d62728"};
    const analysis::Series exact = analysis::entropy_curve(c.steps, c.theta, c.phi);
    int empty = 0;
    for (int t = 1; t <= c.steps; ++t) {
        const auto stats = expsim::tomography_over_seeds(c.theta, c.phi, t, c.n0, c.loss_db, c.seed, c.seeds);
        empty += stats.empty_runs;
        r.table.rows.push_back({(long long)t, stats.entropy_mean, stats.entropy_std, stats.fidelity_mean});
        mean.x.push_back(t);
        mean.y.push_back(stats.entropy_mean);
    }
    if (empty > 0) err << "note: " << empty << " simulated runs recorded no H/V counts and were skipped\n";
    r.plot = svg::LinePlot{"Simulated tomography", "t", "E", false, false,
                           {{to_doubles(exact.t_values), exact.y_values, "exact"}, std::move(mean)}};
    return r;
}

Report run_verify() {
    const auto results = run_verification();
    Report r;
    r.table.columns = {"check", "passed", "detail"};
    for (const auto& res : results)
        r.table.rows.push_back({res.name, std::string(res.passed ? "true" : "false"), res.detail});
    r.failed = !all_passed(results);
    return r;
}

void emit(const RunConfig& c, const Report& r, std::ostream& out, std::ostream& err) {
    if (c.format == Format::json) {
        nlohmann::ordered_json doc;
        doc["command"] = command_name(c.command);
        doc["parameters"] = parameters(c);
        if (c.header) doc["generated"] = utc_timestamp();
        doc["rows"] = rows_to_json(r.table);
        for (const auto& [k, v] : r.extra.items()) doc[k] = v;
        out << doc.dump(2) << '\n';
        return;
    }
    write_csv(out, r.table, c.header ? metadata_line(c) : std::string{});
    if (r.extra.contains("fit")) {
        if (c.output == "-") {
            err << r.extra["fit"].dump() << '\n';
        } else {
            std::ofstream side(fit_sidecar_path(c));
            if (!side) throw std::runtime_error("cannot write '" + fit_sidecar_path(c) + "'");
            side << r.extra["fit"].dump(2) << '\n';
        }
    }
}

}  // namespace

std::string plot_path(const RunConfig& config) {
    if (config.output == "-") return std::string(command_name(config.command)) + ".svg";
    return std::filesystem::path(config.output).replace_extension(".svg").string();
}

std::string fit_sidecar_path(const RunConfig& config) { return config.output + ".fit.json"; }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.threads > 0) set_threads(config.threads);
        Report report;
        switch (config.command) {
            case Command::evolve: report = run_evolve(config); break;
            case Command::entropy_table: report = run_entropy_table(config); break;
            case Command::sweep: report = run_sweep(config); break;
            case Command::trace_distance: report = run_trace_distance(config); break;
            case Command::variance: report = run_variance(config); break;
            case Command::tomography: report = run_tomography(config, err); break;
            case Command::verify: report = run_verify(); break;
        }

        if (config.output == "-") {
            emit(config, report, out, err);
        } else {
            std::ofstream file(config.output);
            if (!file) throw std::runtime_error("cannot write '" + config.output + "'");
            emit(config, report, file, err);
        }

        if (config.plot && report.plot) {
            const std::string svg_text = std::visit([](const auto& p) { return svg::render(p); }, *report.plot);
            svg::write_file(plot_path(config), svg_text);
        }
        if (report.failed) {
            err << "verification failed\n";
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qwalk::cli
