#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwalk/analysis.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;
using namespace qwalk::analysis;
using doctest::Approx;
using std::numbers::pi;

namespace {

Series synthetic(double amplitude, double exponent, int t0, int t1) {
    Series s{{}, {}, "synthetic"};
    for (int t = t0; t <= t1; ++t) {
        s.t_values.push_back(t);
        s.y_values.push_back(amplitude * std::pow(static_cast<double>(t), exponent));
    }
    return s;
}

}  // namespace

TEST_SUITE("sweeps") {
    TEST_CASE("uniform grid") {
        const auto g = uniform_angles(4);
        REQUIRE(g.size() == 4);
        CHECK(g[0] == 0.0);
        CHECK(g[1] == Approx(pi / 2));
        CHECK(g[3] == Approx(3 * pi / 2));
        CHECK_THROWS_AS(uniform_angles(0), InvalidArgument);
    }

    TEST_CASE("maximum of the t = 9 grid sits at the operating points") {
        // 8 x 8 grid contains (pi/2, pi/4) and (3pi/2, 7pi/4)
        const SweepGrid grid = entropy_sweep(9, uniform_angles(8), uniform_angles(8));
        CHECK(grid.entropy.size() == 8);
        CHECK(grid.entropy[0].size() == 8);
        double best = 0.0;
        for (const auto& row : grid.entropy)
            for (double e : row) {
                CHECK(e >= 0.0);
                CHECK(e <= 1.0);
                best = std::max(best, e);
            }
        CHECK(std::abs(grid.entropy[2][1] - 1.0) < 1e-6);
        CHECK(std::abs(grid.entropy[6][7] - 1.0) < 1e-6);
        CHECK(best == Approx(grid.entropy[2][1]).epsilon(1e-12));
    }

    TEST_CASE("step 8 at the operating point") {
        const SweepGrid grid = entropy_sweep(8, {pi / 2}, {pi / 4});
        CHECK(std::abs(grid.entropy[0][0] - 0.99999) < 1e-5);
    }

    TEST_CASE("parallel sweep equals the serial reference") {
        const auto thetas = uniform_angles(9);
        const auto phis = uniform_angles(7);
        const SweepGrid fast = entropy_sweep(13, thetas, phis);
        const SweepGrid slow = analysis::reference::entropy_sweep(13, thetas, phis);
        for (std::size_t i = 0; i < thetas.size(); ++i)
            for (std::size_t j = 0; j < phis.size(); ++j) CHECK(std::abs(fast.entropy[i][j] - slow.entropy[i][j]) < 1e-14);
    }

    TEST_CASE("bad sweep arguments") {
        CHECK_THROWS_AS(entropy_sweep(0, {0.0}, {0.0}), InvalidArgument);
        CHECK_THROWS_AS(entropy_sweep(3, {}, {0.0}), InvalidArgument);
    }
}

TEST_SUITE("series") {
    TEST_CASE("entropy curve against the table") {
        const Series iqw = entropy_curve(11, pi / 2, pi / 4);
        const double expected[] = {1, 0.81128, 1, 0.99967, 1, 0.99967, 1, 0.99999, 1, 0.99999, 1};
        REQUIRE(iqw.size() == 11);
        for (int t = 1; t <= 11; ++t) CHECK(std::abs(iqw.at(t) - expected[t - 1]) < 1e-5);

        const Series hqw = entropy_curve(11, pi / 2, 0.0);
        const double expected_h[] = {1, 0.811, 0.811, 0.896, 0.896, 0.857, 0.857, 0.882, 0.882, 0.865, 0.865};
        for (int t = 1; t <= 11; ++t) CHECK(std::abs(hqw.at(t) - expected_h[t - 1]) < 1e-3);
    }

    TEST_CASE("odd steps up to 60 are maximal") {
        const Series s = entropy_curve(60, pi / 2, pi / 4);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s.t_values[i] % 2 == 1) CHECK(s.y_values[i] >= 1.0 - 1e-6);
    }

    TEST_CASE("incremental curve equals fresh evolution") {
        const Series s = entropy_curve(40, 1.3, 2.2);
        for (int t : {1, 2, 7, 20, 39, 40}) CHECK(std::abs(s.at(t) - entropy_of_walk(1.3, 2.2, t)) < 1e-12);
        CHECK_THROWS_AS(s.at(41), InvalidArgument);
    }

    TEST_CASE("trace distance series") {
        const Series d = trace_distance_series(200, pi / 2, pi / 4);
        CHECK(d.t_values.front() == 2);
        CHECK(d.t_values.back() == 200);
        for (double v : d.y_values) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        // rho_c(1) = I/2, rho_c(2) has |C| = 1/4
        CHECK(d.at(2) == Approx(0.25).epsilon(1e-12));
        CHECK(d.y_values.back() < d.y_values.front());

        CHECK_THROWS_AS(trace_distance_series(1, 0.0, 0.0), InvalidArgument);
    }

    TEST_CASE("variance series and the classical baseline") {
        const Series iqw = variance_series(11, pi / 2, pi / 4);
        const Series hqw = variance_series(11, pi / 2, 0.0);
        CHECK(iqw.at(11) > hqw.at(11));
        CHECK(hqw.at(1) == Approx(1.0).epsilon(1e-14));
        const Series crw = crw_variance_series(64);
        for (std::size_t i = 0; i < crw.size(); ++i) CHECK(std::abs(crw.y_values[i] - crw.t_values[i]) < 1e-10);
    }

    TEST_CASE("parity filter") {
        const Series s = synthetic(1.0, -1.0, 1, 10);
        const Series even = filter_parity(s, Parity::even);
        const Series odd = filter_parity(s, Parity::odd);
        CHECK(even.t_values == std::vector<int>{2, 4, 6, 8, 10});
        CHECK(odd.t_values == std::vector<int>{1, 3, 5, 7, 9});
        CHECK(filter_parity(s, Parity::all).t_values.size() == 10);
    }
}

TEST_SUITE("power-law fit") {
    TEST_CASE("exact power law") {
        const PowerLawFit fit = fit_power_law(synthetic(3.0, -2.0, 1, 100), 1, 100);
        CHECK(std::abs(fit.exponent + 2.0) < 1e-9);
        CHECK(fit.amplitude == Approx(3.0).epsilon(1e-9));
        CHECK(fit.r_squared == Approx(1.0).epsilon(1e-12));
        CHECK(fit.points == 100);
    }

    TEST_CASE("constant series") {
        const PowerLawFit fit = fit_power_law(synthetic(5.0, 0.0, 1, 50), 1, 50);
        CHECK(std::abs(fit.exponent) < 1e-12);
        CHECK(fit.amplitude == Approx(5.0));
        CHECK(fit.r_squared == 1.0);
    }

    TEST_CASE("planted exponents in [-3, 0]") {
        for (double e = -3.0; e <= 0.0; e += 0.25) {
            const PowerLawFit fit = fit_power_law(synthetic(0.7, e, 1, 500), 5, 400);
            CHECK(std::abs(fit.exponent - e) < 1e-9);
            CHECK(fit.points == 396);
        }
    }

    TEST_CASE("errors") {
        Series s = synthetic(1.0, -1.0, 1, 30);
        s.y_values[15] = 0.0;
        CHECK_THROWS_AS(fit_power_law(s, 1, 30), NonPositiveData);
        CHECK_NOTHROW(fit_power_law(s, 17, 30));
        CHECK_THROWS_AS(fit_power_law(synthetic(1.0, -1.0, 1, 30), 1, 9), InvalidArgument);
        CHECK_THROWS_AS(fit_power_law(synthetic(1.0, -1.0, 1, 30), 0, 30), InvalidArgument);
    }
}
