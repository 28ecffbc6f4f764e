// Randomised invariant checks.  Each case draws its inputs from a seeded
// generator so failures are reproducible from the printed seed.
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/analysis.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"
#include "support/matrix_oracle.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    double angle() { return std::uniform_real_distribution<double>(0.0, 2 * pi)(rng); }
    int steps(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    CoinMap coin_map() {
        CoinMap m(random_unitary_coin(rng));
        const int n = steps(0, 5);
        for (int k = 0; k < n; ++k) m.set(steps(-10, 10), random_unitary_coin(rng));
        return m;
    }

    WalkState initial() {
        std::normal_distribution<double> g;
        const Amplitude a(g(rng), g(rng)), b(g(rng), g(rng));
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        return general_initial_state(a / n, b / n);
    }
};

double max_diff(const WalkState& s1, const WalkState& s2) {
    double d = 0.0;
    for (int x = -s1.t(); x <= s1.t(); ++x)
        for (CoinBasis c : {CoinBasis::zero, CoinBasis::one})
            d = std::max(d, std::abs(s1.amplitude(x, c) - s2.amplitude(x, c)));
    return d;
}

}  // namespace

TEST_CASE("normalization and parity support") {
    Gen gen(101);
    for (int k = 0; k < 60; ++k) {
        CAPTURE(k);
        const CoinMap coins = gen.coin_map();
        WalkState s = gen.initial();
        const int steps = k < 3 ? 1000 : gen.steps(1, 200);
        for (int t = 1; t <= steps; ++t) {
            s = step(s, coins);
            if (t % 37 == 0 || t == steps) {
                CHECK(std::abs(s.norm_squared() - 1.0) <= 1e-9);
                for (int x = -t; x <= t; ++x) {
                    if ((x + t) % 2 != 0) {
                        CHECK(s.amplitude(x, CoinBasis::zero) == Amplitude{});
                        CHECK(s.amplitude(x, CoinBasis::one) == Amplitude{});
                    }
                }
            }
        }
    }
}

TEST_CASE("evolution composes") {
    Gen gen(202);
    for (int k = 0; k < 40; ++k) {
        const CoinMap coins = gen.coin_map();
        const WalkState s = gen.initial();
        const int p = gen.steps(0, 40), q = gen.steps(0, 40);
        CHECK(max_diff(evolve(s, coins, p + q), evolve(evolve(s, coins, p), coins, q)) <= 1e-12);
    }
}

TEST_CASE("global phase") {
    Gen gen(303);
    for (int k = 0; k < 40; ++k) {
        const CoinMap coins = gen.coin_map();
        const WalkState s = gen.initial();
        const double alpha = gen.angle();
        const int t = gen.steps(0, 80);
        const WalkState plain = evolve(s, coins, t);
        const WalkState phased = evolve(s.with_global_phase(alpha), coins, t);
        CHECK(max_diff(phased, plain.with_global_phase(alpha)) <= 1e-12);

        const CoinDensity r1 = reduced_coin_density(plain), r2 = reduced_coin_density(phased);
        CHECK(std::abs(r1.A - r2.A) <= 1e-12);
        CHECK(std::abs(r1.C - r2.C) <= 1e-12);
        CHECK(std::abs(von_neumann_entropy(r1) - von_neumann_entropy(r2)) <= 1e-9);
        const auto m1 = position_mean_variance(position_distribution(plain));
        const auto m2 = position_mean_variance(position_distribution(phased));
        CHECK(std::abs(m1.variance - m2.variance) <= 1e-9);
        CHECK(similarity(position_distribution(plain), position_distribution(phased)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("coin density validity, entropy bounds, eigenvalue identities") {
    Gen gen(404);
    for (int k = 0; k < 200; ++k) {
        const WalkState s = evolve(gen.initial(), gen.coin_map(), gen.steps(0, 100));
        const CoinDensity rho = reduced_coin_density(s);
        CHECK(std::abs(rho.trace() - 1.0) <= 1e-10);
        CHECK(rho.determinant() >= -1e-10);
        const double e = von_neumann_entropy(rho);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
        const auto [lo, hi] = eigenvalues(rho);
        CHECK(std::abs(lo + hi - 1.0) <= 1e-10);
        CHECK(std::abs(lo * hi - rho.determinant()) <= 1e-10);
    }
}

TEST_CASE("trace distance is a metric") {
    std::mt19937_64 rng(505);
    for (int k = 0; k < 500; ++k) {
        const CoinDensity a = testing::random_density(rng), b = testing::random_density(rng),
                          c = testing::random_density(rng);
        CHECK(trace_distance(a, b) == trace_distance(b, a));
        CHECK(trace_distance(a, a) <= 1e-12);
        CHECK(trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-10);
        if (trace_distance(a, b) <= 1e-12) CHECK(testing::trace_distance(a, b) <= 1e-11);
    }
}

TEST_CASE("similarity symmetric and maximal only on equal distributions") {
    Gen gen(606);
    for (int k = 0; k < 50; ++k) {
        const int t = gen.steps(1, 40);
        const ProbVector p = position_distribution(evolve(gen.initial(), gen.coin_map(), t));
        const ProbVector q = position_distribution(evolve(gen.initial(), gen.coin_map(), t));
        CHECK(similarity(p, q) == doctest::Approx(similarity(q, p)).epsilon(1e-14));
        CHECK(similarity(p, p) == doctest::Approx(1.0).epsilon(1e-12));
        double max_gap = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) max_gap = std::max(max_gap, std::abs(p.probs[i] - q.probs[i]));
        if (max_gap > 1e-6) CHECK(similarity(p, q) < 1.0 - 1e-12);
    }
}

TEST_CASE("balanced populations at the operating points") {
    for (double phi : {0.0, pi / 4}) {
        WalkState s = balanced_initial_state(pi / 2);
        const CoinMap coins = iqw_coin_map(phi);
        for (int t = 1; t <= 200; ++t) {
            s = step(s, coins);
            CHECK(std::abs(reduced_coin_density(s).A - 0.5) <= 1e-9);
        }
    }
}

TEST_CASE("odd steps maximal and even steps near-maximal") {
    const analysis::Series e = analysis::entropy_curve(99, pi / 2, pi / 4);
    for (std::size_t i = 0; i < e.size(); ++i) {
        const int t = e.t_values[i];
        CAPTURE(t);
        if (t % 2 == 1) CHECK(e.y_values[i] >= 1.0 - 1e-6);
        else if (t >= 4) CHECK(e.y_values[i] >= 0.999);
    }
}

TEST_CASE("sweep conjugation symmetry") {
    // (theta, phi) -> (2pi - theta, 2pi - phi) conjugates every amplitude.
    const auto grid = analysis::uniform_angles(12);
    std::vector<double> mirrored;
    for (double g : grid) mirrored.push_back(2 * pi - g);
    for (int t : {3, 8, 15}) {
        const auto a = analysis::entropy_sweep(t, grid, grid);
        const auto b = analysis::entropy_sweep(t, mirrored, mirrored);
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(a.entropy[i][j] - b.entropy[i][j]) <= 1e-9);
    }
}
