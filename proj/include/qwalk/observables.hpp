#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

// Reduced coin state rho_c = [[A, C], [C*, B]] after tracing out position.
struct CoinDensity {
    double A = 1.0;  // population of |0>
    double B = 0.0;  // population of |1>
    Amplitude C{};   // coherence sum_x a b*

    double trace() const { return A + B; }
    double determinant() const { return A * B - std::norm(C); }

    // Builds rho = (I + x X + y Y + z Z) / 2.
    static CoinDensity from_bloch(double x, double y, double z);
    // (x, y, z) with x = 2 Re C, y = -2 Im C, z = A - B.
    std::array<double, 3> bloch() const;
};

// Position distribution over the parity-valid sites of a walk.
struct ProbVector {
    std::vector<int> positions;
    std::vector<double> probs;

    std::size_t size() const { return positions.size(); }
    double total() const;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

CoinDensity reduced_coin_density(const WalkState& state);

// Ascending eigenvalues (lambda_minus, lambda_plus) of the 2x2 Hermitian matrix.
std::pair<double, double> eigenvalues(const CoinDensity& rho);

// Entropy in bits; eigenvalues clamped to [0, 1] and 0 log 0 = 0.
double von_neumann_entropy(const CoinDensity& rho);

// Evolves the balanced state (theta) under the phase-defect map (phi) for t
// steps and returns the coin-walker entanglement entropy.
double entropy_of_walk(double theta, double phi, int t);

// (1/2) Tr |rho1 - rho2|.
double trace_distance(const CoinDensity& rho1, const CoinDensity& rho2);

// Uhlmann fidelity (Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)))^2.  For 2x2 this is
// Tr(rho1 rho2) + 2 sqrt(det rho1 det rho2).
double fidelity(const CoinDensity& rho1, const CoinDensity& rho2);

ProbVector position_distribution(const WalkState& state);

Moments position_mean_variance(const ProbVector& p);

// sum_x sqrt(p_a(x) p_b(x)) over the union of supports.
double similarity(const ProbVector& p_a, const ProbVector& p_b);

namespace reference {

// Single serial pass, no blocking.
CoinDensity reduced_coin_density(const WalkState& state);

}  // namespace reference

}  // namespace qwalk
