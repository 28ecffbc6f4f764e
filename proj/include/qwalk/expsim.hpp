#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/walk_state.hpp"

// Simulated time-bin measurement: per-position projective counts in four
// polarisation bases, Poisson shot noise and per-loop loss, followed by
// linear-inversion tomography of the coin state.
namespace qwalk::expsim {

// H = |0>, V = |1>, D = (|0>+|1>)/sqrt2, L = (|0>-i|1>)/sqrt2.
enum class MeasBasis : int { H = 0, V = 1, D = 2, L = 3 };

inline constexpr std::array<MeasBasis, 4> kAllBases = {MeasBasis::H, MeasBasis::V, MeasBasis::D,
                                                       MeasBasis::L};

std::string_view label(MeasBasis basis);

// Normalised (c0, c1) of the projector state.
std::pair<Amplitude, Amplitude> projector_state(MeasBasis basis);

struct CountRow {
    int position = 0;
    MeasBasis basis = MeasBasis::H;
    std::uint64_t count = 0;

    bool operator==(const CountRow&) const = default;
};

struct CountsTable {
    int t = 0;
    std::vector<CountRow> rows;
    double n0 = 0.0;
    double loss_db_per_step = 0.0;

    std::uint64_t total(MeasBasis basis) const;
    bool operator==(const CountsTable&) const = default;
};

// Summed counts (or exact expected weights) per basis over all positions.
struct BasisTotals {
    double h = 0.0;
    double v = 0.0;
    double d = 0.0;
    double l = 0.0;
};

// |c0* a(x,t) + c1* b(x,t)|^2
double projection_probability(const WalkState& state, int x, MeasBasis basis);

// 10^(-loss_db_per_step * t / 10)
double transmission(double loss_db_per_step, int t);

// One independent Poisson draw per (parity-valid position, basis), mean
// n0 * transmission * projection_probability.  Deterministic in `seed`.
CountsTable simulate_counts(const WalkState& state, double n0, double loss_db_per_step,
                            std::uint64_t seed);

// Noise-free basis weights sum_x projection_probability(x, basis).
BasisTotals expected_totals(const WalkState& state);

BasisTotals totals(const CountsTable& counts);

// Linear inversion with the H+V total as photon-number reference, followed by
// PSD repair (eigenvalue clipping + renormalisation).  Throws EmptyCounts when
// there are no H/V counts.
CoinDensity reconstruct_density(const BasisTotals& totals);
CoinDensity reconstruct_density(const CountsTable& counts);

struct TomographyRun {
    CoinDensity reconstructed;
    CoinDensity exact;
    double entropy = 0.0;
    double fidelity = 0.0;
};

// evolve -> simulate_counts -> reconstruct_density, keeping the exact state
// alongside for fidelity.
TomographyRun simulate_tomography(double theta, double phi, int t, double n0, double loss_db,
                                  std::uint64_t seed);

double experimental_entropy(double theta, double phi, int t, double n0, double loss_db,
                            std::uint64_t seed);

struct SeedStatistics {
    int runs = 0;
    int empty_runs = 0;  // seeds that produced no H/V counts
    double entropy_mean = 0.0;
    double entropy_std = 0.0;
    double fidelity_mean = 0.0;
    std::vector<double> entropies;  // one per non-empty run, in seed order
};

// Runs seeds first_seed .. first_seed + count - 1 (in parallel) and
// aggregates.  Seeds raising EmptyCounts are counted, not averaged.
SeedStatistics tomography_over_seeds(double theta, double phi, int t, double n0, double loss_db,
                                     std::uint64_t first_seed, int count);

}  // namespace qwalk::expsim
