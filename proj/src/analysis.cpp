#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/oracle.hpp"

namespace qwalk::analysis {

namespace {

void check_sweep_args(int t, const std::vector<double>& theta_grid,
                      const std::vector<double>& phi_grid) {
    if (t < 1) throw InvalidArgument("sweep step t must be at least 1");
    if (theta_grid.empty() || phi_grid.empty()) throw InvalidArgument("sweep grids must be non-empty");
}

// Walks one state forward and hands every intermediate state to `visit`.
template <typename Visit>
void walk(int t_max, double theta, double phi, Visit&& visit) {
    const CoinMap coins = iqw_coin_map(phi);
    WalkState state = balanced_initial_state(theta);
    visit(state);
    for (int t = 1; t <= t_max; ++t) {
        state = step(state, coins);
        visit(state);
    }
}

}  // namespace

double Series::at(int t) const {
    auto it = std::lower_bound(t_values.begin(), t_values.end(), t);
    if (it == t_values.end() || *it != t) {
        throw InvalidArgument("series '" + label + "' has no entry for t = " + std::to_string(t));
    }
    return y_values[static_cast<std::size_t>(it - t_values.begin())];
}

std::vector<double> uniform_angles(int n) {
    if (n < 1) throw InvalidArgument("grid size must be at least 1");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out[k] = 2.0 * std::numbers::pi * k / n;
    return out;
}

SweepGrid entropy_sweep(int t, const std::vector<double>& theta_grid,
                        const std::vector<double>& phi_grid) {
    check_sweep_args(t, theta_grid, phi_grid);
    const int rows = static_cast<int>(theta_grid.size());
    const int cols = static_cast<int>(phi_grid.size());
    SweepGrid grid{theta_grid, phi_grid, t,
                   std::vector<std::vector<double>>(rows, std::vector<double>(cols))};
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            grid.entropy[i][j] = entropy_of_walk(theta_grid[i], phi_grid[j], t);
        }
    }
    return grid;
}

Series entropy_curve(int t_max, double theta, double phi) {
    if (t_max < 1) throw InvalidArgument("t_max must be at least 1");
    Series s{{}, {}, "entropy"};
    walk(t_max, theta, phi, [&](const WalkState& state) {
        if (state.t() == 0) return;
        s.t_values.push_back(state.t());
        s.y_values.push_back(von_neumann_entropy(reduced_coin_density(state)));
    });
    return s;
}

Series trace_distance_series(int t_max, double theta, double phi) {
    if (t_max < 2) throw InvalidArgument("t_max must be at least 2");
    Series s{{}, {}, "trace_distance"};
    CoinDensity previous;
    walk(t_max, theta, phi, [&](const WalkState& state) {
        const CoinDensity rho = reduced_coin_density(state);
        if (state.t() >= 2) {
            s.t_values.push_back(state.t());
            s.y_values.push_back(trace_distance(rho, previous));
        }
        previous = rho;
    });
    return s;
}

Series variance_series(int t_max, double theta, double phi) {
    if (t_max < 1) throw InvalidArgument("t_max must be at least 1");
    Series s{{}, {}, "variance"};
    walk(t_max, theta, phi, [&](const WalkState& state) {
        if (state.t() == 0) return;
        s.t_values.push_back(state.t());
        s.y_values.push_back(position_mean_variance(position_distribution(state)).variance);
    });
    return s;
}

Series crw_variance_series(int t_max) {
    if (t_max < 1) throw InvalidArgument("t_max must be at least 1");
    Series s{{}, {}, "crw_variance"};
    for (int t = 1; t <= t_max; ++t) {
        s.t_values.push_back(t);
        s.y_values.push_back(position_mean_variance(oracle::crw_distribution(t)).variance);
    }
    return s;
}

Series filter_parity(const Series& series, Parity parity) {
    if (parity == Parity::all) return series;
    Series out{{}, {}, series.label};
    const int want = parity == Parity::even ? 0 : 1;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (std::abs(series.t_values[i]) % 2 == want) {
            out.t_values.push_back(series.t_values[i]);
            out.y_values.push_back(series.y_values[i]);
        }
    }
    return out;
}

PowerLawFit fit_power_law(const Series& series, int t_min, int t_max) {
    if (series.t_values.size() != series.y_values.size()) {
        throw InvalidArgument("series t and y lengths differ");
    }
    if (t_min < 1 || t_max < t_min) throw InvalidArgument("fit range must satisfy 1 <= t_min <= t_max");

    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const int t = series.t_values[i];
        if (t < t_min || t > t_max) continue;
        const double y = series.y_values[i];
        if (!(y > 0.0)) {
            throw NonPositiveData("non-positive value " + std::to_string(y) + " at t = " +
                                  std::to_string(t) + " inside fit range");
        }
        lx.push_back(std::log(static_cast<double>(t)));
        ly.push_back(std::log(y));
    }
    if (lx.size() < 10) {
        throw InvalidArgument("power-law fit needs at least 10 points in range, got " +
                              std::to_string(lx.size()));
    }

    PowerLawFit fit;
    fit.t_min = t_min;
    fit.t_max = t_max;
    fit.points = lx.size();
    if (std::all_of(ly.begin(), ly.end(), [&](double v) { return v == ly.front(); })) {
        fit.exponent = 0.0;
        fit.amplitude = std::exp(ly.front());
        fit.r_squared = 1.0;
        return fit;
    }

    const auto n = static_cast<double>(lx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double dx = lx[i] - mx, dy = ly[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw InvalidArgument("fit range spans a single t value");

    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    fit.amplitude = std::exp(intercept);
    double ss_res = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double r = ly[i] - (intercept + fit.exponent * lx[i]);
        ss_res += r * r;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

namespace reference {

SweepGrid entropy_sweep(int t, const std::vector<double>& theta_grid,
                        const std::vector<double>& phi_grid) {
    check_sweep_args(t, theta_grid, phi_grid);
    SweepGrid grid{theta_grid, phi_grid, t, {}};
    for (double theta : theta_grid) {
        std::vector<double> row;
        row.reserve(phi_grid.size());
        for (double phi : phi_grid) {
            const WalkState s =
                qwalk::reference::evolve(balanced_initial_state(theta), iqw_coin_map(phi), t);
            row.push_back(von_neumann_entropy(qwalk::reference::reduced_coin_density(s)));
        }
        grid.entropy.push_back(std::move(row));
    }
    return grid;
}

}  // namespace reference

}  // namespace qwalk::analysis
