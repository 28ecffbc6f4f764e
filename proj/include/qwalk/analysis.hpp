#pragma once

#include <string>
#include <vector>

namespace qwalk::analysis {

// Entropy over a (theta, phi) grid at fixed step; entropy[i][j] belongs to
// (theta_values[i], phi_values[j]).
struct SweepGrid {
    std::vector<double> theta_values;
    std::vector<double> phi_values;
    int t = 0;
    std::vector<std::vector<double>> entropy;
};

// Step-indexed scalar series; t_values strictly increasing.
struct Series {
    std::vector<int> t_values;
    std::vector<double> y_values;
    std::string label;

    std::size_t size() const { return t_values.size(); }
    // Value at step t; throws InvalidArgument if absent.
    double at(int t) const;
};

// y ~ amplitude * t^exponent, fitted over [t_min, t_max].
struct PowerLawFit {
    double exponent = 0.0;
    double amplitude = 0.0;
    double r_squared = 0.0;
    int t_min = 0;
    int t_max = 0;
    std::size_t points = 0;
};

enum class Parity { all, even, odd };

// n evenly spaced angles k * 2pi / n, k = 0..n-1.
std::vector<double> uniform_angles(int n);

// Every grid point evolved independently; points are distributed over threads.
SweepGrid entropy_sweep(int t, const std::vector<double>& theta_grid,
                        const std::vector<double>& phi_grid);

// Entropy for t = 1..t_max along one evolving state.
Series entropy_curve(int t_max, double theta, double phi);

// D(t) = trace distance between rho_c(t) and rho_c(t-1), t = 2..t_max.
Series trace_distance_series(int t_max, double theta, double phi);

// Position variance for t = 1..t_max.
Series variance_series(int t_max, double theta, double phi);

// Classical random walk variance for t = 1..t_max from the binomial distribution.
Series crw_variance_series(int t_max);

Series filter_parity(const Series& series, Parity parity);

// Least squares on (log t, log y) over points with t in [t_min, t_max].
// Throws NonPositiveData if any y <= 0 there, InvalidArgument if fewer than
// 10 points fall in range.
PowerLawFit fit_power_law(const Series& series, int t_min, int t_max);

namespace reference {

SweepGrid entropy_sweep(int t, const std::vector<double>& theta_grid,
                        const std::vector<double>& phi_grid);

}  // namespace reference

}  // namespace qwalk::analysis
