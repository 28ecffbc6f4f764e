#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"
#include "support/matrix_oracle.hpp"

using namespace qwalk;
using doctest::Approx;
using std::numbers::pi;

TEST_SUITE("reduced coin density") {
    TEST_CASE("balanced state at t = 0") {
        const CoinDensity rho = reduced_coin_density(balanced_initial_state(pi / 2));
        CHECK(rho.A == Approx(0.5).epsilon(1e-15));
        CHECK(rho.B == Approx(0.5).epsilon(1e-15));
        // a b* = (1/sqrt2)(-i/sqrt2)
        CHECK(std::abs(rho.C - Amplitude(0.0, -0.5)) < 1e-15);
    }

    TEST_CASE("after one phase-defect step the coherence vanishes") {
        // a and b live on different sites (x = -1 and x = +1)
        const WalkState s = step(balanced_initial_state(pi / 2), iqw_coin_map(pi / 4));
        const CoinDensity rho = reduced_coin_density(s);
        CHECK(rho.A == Approx(0.5).epsilon(1e-15));
        CHECK(rho.B == Approx(0.5).epsilon(1e-15));
        CHECK(std::abs(rho.C) < 1e-16);
    }

    TEST_CASE("product state under identity coins") {
        const WalkState s = evolve(general_initial_state(1.0, 0.0), CoinMap::uniform(CoinOperator::identity()), 7);
        const CoinDensity rho = reduced_coin_density(s);
        CHECK(rho.A == 1.0);
        CHECK(rho.B == 0.0);
        CHECK(rho.C == Amplitude{});
        CHECK(von_neumann_entropy(rho) == 0.0);
    }

    TEST_CASE("blocked parallel reduction agrees with the serial pass") {
        const WalkState s = evolve(balanced_initial_state(0.4), iqw_coin_map(1.2), 3000);
        const CoinDensity fast = reduced_coin_density(s);
        const CoinDensity slow = reference::reduced_coin_density(s);
        CHECK(std::abs(fast.A - slow.A) < 1e-13);
        CHECK(std::abs(fast.B - slow.B) < 1e-13);
        CHECK(std::abs(fast.C - slow.C) < 1e-13);
        // and is deterministic
        const CoinDensity again = reduced_coin_density(s);
        CHECK(again.A == fast.A);
        CHECK(again.C == fast.C);
    }
}

TEST_SUITE("entropy") {
    TEST_CASE("limiting cases") {
        CHECK(von_neumann_entropy({1.0, 0.0, {}}) == 0.0);
        CHECK(von_neumann_entropy({0.5, 0.5, {}}) == Approx(1.0).epsilon(1e-15));
        // |C| a hair above 1/2 must not produce NaN
        CHECK(von_neumann_entropy({0.5, 0.5, Amplitude(0.5 + 1e-16, 0.0)}) == 0.0);
    }

    TEST_CASE("phase-defect walk table values") {
        CHECK(std::abs(entropy_of_walk(pi / 2, pi / 4, 2) - 0.81128) < 1e-5);
        CHECK(std::abs(entropy_of_walk(pi / 2, pi / 4, 9) - 1.0) < 1e-6);
        CHECK(std::abs(entropy_of_walk(pi / 2, pi / 4, 4) - 0.99967) < 1e-5);
        CHECK(std::abs(entropy_of_walk(pi / 2, 0.0, 4) - 0.896) < 1e-3);
        CHECK_THROWS_AS(entropy_of_walk(0.0, 0.0, -1), InvalidArgument);
    }

    TEST_CASE("closed form matches an eigensolver on random densities") {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 300; ++k) {
            const CoinDensity rho = testing::random_density(rng, k % 10 == 0);
            CHECK(von_neumann_entropy(rho) == Approx(testing::entropy_bits(rho)).epsilon(1e-10));
            const auto [lo, hi] = eigenvalues(rho);
            CHECK(lo + hi == Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(lo * hi - rho.determinant()) < 1e-12);
        }
    }
}

TEST_SUITE("distances") {
    TEST_CASE("trace distance examples") {
        const CoinDensity zero{1.0, 0.0, {}}, one{0.0, 1.0, {}};
        const CoinDensity mixed{0.3, 0.7, Amplitude(0.1, -0.2)};
        CHECK(trace_distance(mixed, mixed) == 0.0);
        CHECK(trace_distance(zero, one) == Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("trace distance matches singular values") {
        std::mt19937_64 rng(5);
        for (int k = 0; k < 300; ++k) {
            const CoinDensity r1 = testing::random_density(rng), r2 = testing::random_density(rng);
            CHECK(std::abs(trace_distance(r1, r2) - testing::trace_distance(r1, r2)) < 1e-12);
        }
    }

    TEST_CASE("fidelity examples") {
        const CoinDensity zero{1.0, 0.0, {}}, one{0.0, 1.0, {}}, mixed{0.5, 0.5, {}};
        const CoinDensity r{0.3, 0.7, Amplitude(0.1, -0.2)};
        CHECK(fidelity(r, r) == Approx(1.0).epsilon(1e-12));
        CHECK(fidelity(zero, one) == 0.0);
        CHECK(fidelity(zero, mixed) == Approx(0.5).epsilon(1e-15));
    }

    TEST_CASE("fidelity closed form matches matrix square roots") {
        std::mt19937_64 rng(9);
        for (int k = 0; k < 300; ++k) {
            const bool pure = k % 7 == 0;
            const CoinDensity r1 = testing::random_density(rng, pure);
            const CoinDensity r2 = testing::random_density(rng);
            // With a pure r1 the oracle takes sqrt of a rounding-level
            // eigenvalue, so it is only good to ~sqrt(eps).
            CHECK(std::abs(fidelity(r1, r2) - testing::fidelity(r1, r2)) < (pure ? 1e-7 : 1e-10));
            CHECK(std::abs(fidelity(r1, r2) - fidelity(r2, r1)) < 1e-12);
        }
    }
}

TEST_SUITE("position statistics") {
    TEST_CASE("distribution at t = 0 and t = 1") {
        const ProbVector p0 = position_distribution(balanced_initial_state(pi / 2));
        REQUIRE(p0.size() == 1);
        CHECK(p0.positions[0] == 0);
        CHECK(p0.probs[0] == Approx(1.0).epsilon(1e-15));

        const ProbVector p1 = position_distribution(step(balanced_initial_state(pi / 2), iqw_coin_map(0.0)));
        REQUIRE(p1.size() == 2);
        CHECK(p1.positions == std::vector<int>{-1, 1});
        CHECK(p1.probs[0] == Approx(0.5).epsilon(1e-15));
        CHECK(p1.probs[1] == Approx(0.5).epsilon(1e-15));
    }

    TEST_CASE("only parity-valid sites are listed") {
        const ProbVector p = position_distribution(evolve(balanced_initial_state(pi / 2), iqw_coin_map(pi / 4), 11));
        CHECK(p.size() == 12);
        for (int x : p.positions) CHECK((x + 11) % 2 == 0);
        CHECK(p.total() == Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("mean and variance") {
        const Moments m0 = position_mean_variance({{0}, {1.0}});
        CHECK(m0.mean == 0.0);
        CHECK(m0.variance == 0.0);
        const Moments m1 = position_mean_variance({{-1, 1}, {0.5, 0.5}});
        CHECK(m1.mean == 0.0);
        CHECK(m1.variance == 1.0);
        CHECK_THROWS_AS(position_mean_variance({{0, 1}, {1.0}}), InvalidArgument);
    }

    TEST_CASE("variance at t = 11") {
        // Frozen from an independent numpy implementation of the amplitude
        // recursion.  The Hadamard value is 1147.5 / 32 exactly.
        const auto var = [](double phi) {
            return position_mean_variance(position_distribution(
                       evolve(balanced_initial_state(pi / 2), iqw_coin_map(phi), 11)))
                .variance;
        };
        CHECK(var(pi / 4) == Approx(43.587329749499226).epsilon(1e-12));
        CHECK(var(0.0) == Approx(35.859375).epsilon(1e-12));
    }

    TEST_CASE("similarity") {
        const ProbVector a{{-1, 1}, {0.5, 0.5}};
        const ProbVector b{{-1}, {1.0}};
        const ProbVector c{{3, 5}, {0.25, 0.75}};
        CHECK(similarity(a, a) == Approx(1.0).epsilon(1e-15));
        CHECK(similarity(a, c) == 0.0);
        CHECK(similarity(a, b) == Approx(std::sqrt(0.5)).epsilon(1e-15));
        CHECK(similarity(b, a) == similarity(a, b));
    }
}
