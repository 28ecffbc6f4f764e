#include "qwalk/expsim.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk::expsim {

std::string_view label(MeasBasis basis) {
    switch (basis) {
        case MeasBasis::H: return "H";
        case MeasBasis::V: return "V";
        case MeasBasis::D: return "D";
        case MeasBasis::L: return "L";
    }
    return "?";
}

std::pair<Amplitude, Amplitude> projector_state(MeasBasis basis) {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    switch (basis) {
        case MeasBasis::H: return {1.0, 0.0};
        case MeasBasis::V: return {0.0, 1.0};
        case MeasBasis::D: return {h, h};
        case MeasBasis::L: return {h, Amplitude(0.0, -h)};
    }
    throw InvalidArgument("unknown measurement basis");
}

std::uint64_t CountsTable::total(MeasBasis basis) const {
    std::uint64_t sum = 0;
    for (const auto& row : rows) {
        if (row.basis == basis) sum += row.count;
    }
    return sum;
}

double projection_probability(const WalkState& state, int x, MeasBasis basis) {
    const auto [c0, c1] = projector_state(basis);
    return std::norm(std::conj(c0) * state.amplitude(x, CoinBasis::zero) +
                     std::conj(c1) * state.amplitude(x, CoinBasis::one));
}

double transmission(double loss_db_per_step, int t) {
    return std::pow(10.0, -loss_db_per_step * t / 10.0);
}

CountsTable simulate_counts(const WalkState& state, double n0, double loss_db_per_step,
                            std::uint64_t seed) {
    if (!(n0 > 0.0)) throw InvalidArgument("n0 must be positive");
    if (!(loss_db_per_step >= 0.0)) throw InvalidArgument("loss must be non-negative");

    CountsTable table{state.t(), {}, n0, loss_db_per_step};
    const double scale = n0 * transmission(loss_db_per_step, state.t());
    std::mt19937_64 rng(seed);
    table.rows.reserve(static_cast<std::size_t>(4 * (state.t() + 1)));
    for (int x = -state.t(); x <= state.t(); x += 2) {
        for (MeasBasis basis : kAllBases) {
            const double mean = scale * projection_probability(state, x, basis);
            std::uint64_t count = 0;
            if (mean > 0.0) {
                std::poisson_distribution<std::uint64_t> poisson(mean);
                count = poisson(rng);
            }
            table.rows.push_back({x, basis, count});
        }
    }
    return table;
}

BasisTotals expected_totals(const WalkState& state) {
    BasisTotals out;
    for (int x = -state.t(); x <= state.t(); x += 2) {
        out.h += projection_probability(state, x, MeasBasis::H);
        out.v += projection_probability(state, x, MeasBasis::V);
        out.d += projection_probability(state, x, MeasBasis::D);
        out.l += projection_probability(state, x, MeasBasis::L);
    }
    return out;
}

BasisTotals totals(const CountsTable& counts) {
    return {static_cast<double>(counts.total(MeasBasis::H)),
            static_cast<double>(counts.total(MeasBasis::V)),
            static_cast<double>(counts.total(MeasBasis::D)),
            static_cast<double>(counts.total(MeasBasis::L))};
}

CoinDensity reconstruct_density(const BasisTotals& t) {
    const double reference = t.h + t.v;
    if (!(reference > 0.0)) throw EmptyCounts("no H/V counts to normalise against");

    const double p_h = t.h / reference;
    const double p_v = t.v / reference;
    const double p_d = t.d / reference;
    const double p_l = t.l / reference;
    double x = 2.0 * p_d - 1.0;
    double y = 1.0 - 2.0 * p_l;
    double z = p_h - p_v;

    // For a qubit the eigenvalues are (1 +- r)/2.  Clipping the negative one
    // and renormalising the trace maps the Bloch vector onto the unit sphere.
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1.0) {
        x /= r;
        y /= r;
        z /= r;
    }
    return CoinDensity::from_bloch(x, y, z);
}

CoinDensity reconstruct_density(const CountsTable& counts) {
    return reconstruct_density(totals(counts));
}

TomographyRun simulate_tomography(double theta, double phi, int t, double n0, double loss_db,
                                  std::uint64_t seed) {
    if (t < 0) throw InvalidArgument("t must be non-negative");
    const WalkState state = evolve(balanced_initial_state(theta), iqw_coin_map(phi), t);
    TomographyRun run;
    run.exact = reduced_coin_density(state);
    run.reconstructed = reconstruct_density(simulate_counts(state, n0, loss_db, seed));
    run.entropy = von_neumann_entropy(run.reconstructed);
    run.fidelity = fidelity(run.reconstructed, run.exact);
    return run;
}

double experimental_entropy(double theta, double phi, int t, double n0, double loss_db,
                            std::uint64_t seed) {
    return simulate_tomography(theta, phi, t, n0, loss_db, seed).entropy;
}

SeedStatistics tomography_over_seeds(double theta, double phi, int t, double n0, double loss_db,
                                     std::uint64_t first_seed, int count) {
    if (count < 1) throw InvalidArgument("seed count must be at least 1");
    if (t < 0) throw InvalidArgument("t must be non-negative");
    if (!(n0 > 0.0)) throw InvalidArgument("n0 must be positive");
    if (!(loss_db >= 0.0)) throw InvalidArgument("loss must be non-negative");

    const WalkState state = evolve(balanced_initial_state(theta), iqw_coin_map(phi), t);
    const CoinDensity exact = reduced_coin_density(state);

    std::vector<std::optional<TomographyRun>> runs(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) {
        try {
            TomographyRun run;
            run.exact = exact;
            run.reconstructed = reconstruct_density(
                simulate_counts(state, n0, loss_db, first_seed + static_cast<std::uint64_t>(k)));
            run.entropy = von_neumann_entropy(run.reconstructed);
            run.fidelity = fidelity(run.reconstructed, exact);
            runs[k] = run;
        } catch (const EmptyCounts&) {
            runs[k] = std::nullopt;
        }
    }

    SeedStatistics stats;
    stats.runs = count;
    double fid_sum = 0.0;
    for (const auto& run : runs) {
        if (!run) {
            ++stats.empty_runs;
            continue;
        }
        stats.entropies.push_back(run->entropy);
        fid_sum += run->fidelity;
    }
    const auto n = static_cast<double>(stats.entropies.size());
    if (n == 0.0) {
        stats.entropy_mean = stats.entropy_std = stats.fidelity_mean = std::nan("");
        return stats;
    }
    for (double e : stats.entropies) stats.entropy_mean += e;
    stats.entropy_mean /= n;
    double ss = 0.0;
    for (double e : stats.entropies) ss += (e - stats.entropy_mean) * (e - stats.entropy_mean);
    stats.entropy_std = n > 1.0 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    stats.fidelity_mean = fid_sum / n;
    return stats;
}

}  // namespace qwalk::expsim
