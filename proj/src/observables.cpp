#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

struct DensitySums {
    double a = 0.0;
    double b = 0.0;
    Amplitude c{};
};

DensitySums accumulate(std::span<const Amplitude> a, std::span<const Amplitude> b,
                       std::ptrdiff_t begin, std::ptrdiff_t end) {
    DensitySums s;
    for (std::ptrdiff_t i = begin; i < end; ++i) {
        s.a += std::norm(a[i]);
        s.b += std::norm(b[i]);
        s.c += a[i] * std::conj(b[i]);
    }
    return s;
}

double entropy_term(double lambda) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    return lambda > 0.0 ? -lambda * std::log2(lambda) : 0.0;
}

}  // namespace

CoinDensity CoinDensity::from_bloch(double x, double y, double z) {
    return {0.5 * (1.0 + z), 0.5 * (1.0 - z), Amplitude(0.5 * x, -0.5 * y)};
}

std::array<double, 3> CoinDensity::bloch() const {
    return {2.0 * C.real(), -2.0 * C.imag(), A - B};
}

double ProbVector::total() const {
    double sum = 0.0;
    for (double p : probs) sum += p;
    return sum;
}

CoinDensity reduced_coin_density(const WalkState& state) {
    const auto a = state.amp0();
    const auto b = state.amp1();
    const auto n = static_cast<std::ptrdiff_t>(a.size());
    const std::ptrdiff_t blocks = (n + kReductionBlock - 1) / kReductionBlock;

    std::vector<DensitySums> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static) if (n >= kParallelMinSites)
    for (std::ptrdiff_t k = 0; k < blocks; ++k) {
        partial[k] = accumulate(a, b, k * kReductionBlock, std::min(n, (k + 1) * kReductionBlock));
    }

    CoinDensity rho{0.0, 0.0, {}};
    for (const auto& s : partial) {
        rho.A += s.a;
        rho.B += s.b;
        rho.C += s.c;
    }
    return rho;
}

std::pair<double, double> eigenvalues(const CoinDensity& rho) {
    const double half_trace = 0.5 * (rho.A + rho.B);
    const double half_gap = 0.5 * (rho.A - rho.B);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(rho.C));
    return {half_trace - radius, half_trace + radius};
}

double von_neumann_entropy(const CoinDensity& rho) {
    const auto [lo, hi] = eigenvalues(rho);
    return std::clamp(entropy_term(lo) + entropy_term(hi), 0.0, 1.0);
}

double entropy_of_walk(double theta, double phi, int t) {
    if (t < 0) throw InvalidArgument("t must be non-negative");
    const WalkState final_state = evolve(balanced_initial_state(theta), iqw_coin_map(phi), t);
    return von_neumann_entropy(reduced_coin_density(final_state));
}

double trace_distance(const CoinDensity& rho1, const CoinDensity& rho2) {
    const CoinDensity diff{rho1.A - rho2.A, rho1.B - rho2.B, rho1.C - rho2.C};
    const auto [lo, hi] = eigenvalues(diff);
    return std::clamp(0.5 * (std::abs(lo) + std::abs(hi)), 0.0, 1.0);
}

double fidelity(const CoinDensity& rho1, const CoinDensity& rho2) {
    // Tr(rho1 rho2) for Hermitian 2x2
    const double overlap = rho1.A * rho2.A + rho1.B * rho2.B + 2.0 * (rho1.C * std::conj(rho2.C)).real();
    const double dets = std::max(0.0, rho1.determinant()) * std::max(0.0, rho2.determinant());
    return std::clamp(overlap + 2.0 * std::sqrt(dets), 0.0, 1.0);
}

ProbVector position_distribution(const WalkState& state) {
    ProbVector p;
    const auto a = state.amp0();
    const auto b = state.amp1();
    const int t = state.t();
    p.positions.reserve(static_cast<std::size_t>(t + 1));
    p.probs.reserve(static_cast<std::size_t>(t + 1));
    for (int x = -t; x <= t; x += 2) {
        const auto i = static_cast<std::size_t>(x + t);
        p.positions.push_back(x);
        p.probs.push_back(std::norm(a[i]) + std::norm(b[i]));
    }
    return p;
}

Moments position_mean_variance(const ProbVector& p) {
    if (p.positions.size() != p.probs.size()) {
        throw InvalidArgument("ProbVector positions and probs differ in length");
    }
    Moments m;
    for (std::size_t i = 0; i < p.size(); ++i) m.mean += p.probs[i] * p.positions[i];
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p.positions[i] - m.mean;
        m.variance += p.probs[i] * d * d;
    }
    return m;
}

double similarity(const ProbVector& p_a, const ProbVector& p_b) {
    if (p_a.positions.size() != p_a.probs.size() || p_b.positions.size() != p_b.probs.size()) {
        throw InvalidArgument("ProbVector positions and probs differ in length");
    }
    std::map<int, double> other;
    for (std::size_t i = 0; i < p_b.size(); ++i) other[p_b.positions[i]] += p_b.probs[i];
    double s = 0.0;
    for (std::size_t i = 0; i < p_a.size(); ++i) {
        auto it = other.find(p_a.positions[i]);
        if (it != other.end()) s += std::sqrt(std::max(0.0, p_a.probs[i] * it->second));
    }
    return std::clamp(s, 0.0, 1.0);
}

namespace reference {

CoinDensity reduced_coin_density(const WalkState& state) {
    const auto a = state.amp0();
    const auto b = state.amp1();
    CoinDensity rho{0.0, 0.0, {}};
    for (std::size_t i = 0; i < a.size(); ++i) {
        rho.A += std::norm(a[i]);
        rho.B += std::norm(b[i]);
        rho.C += a[i] * std::conj(b[i]);
    }
    return rho;
}

}  // namespace reference

}  // namespace qwalk
