#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/coin.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

bool close(Amplitude a, Amplitude b, double tol = 1e-15) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("hadamard coin columns and involution") {
    const CoinOperator h = hadamard_coin();
    const double s = 1.0 / std::sqrt(2.0);

    auto [a, b] = h.apply(1.0, 0.0);
    CHECK(close(a, s));
    CHECK(close(b, s));

    std::tie(a, b) = h.apply(0.0, 1.0);
    CHECK(close(a, s));
    CHECK(close(b, -s));

    const Amplitude in0(0.3, -0.2), in1(-0.7, 0.4);
    const auto [m0, m1] = h.apply(in0, in1);
    const auto [r0, r1] = h.apply(m0, m1);
    CHECK(close(r0, in0, 1e-15));
    CHECK(close(r1, in1, 1e-15));
}

TEST_CASE("phase defect coin is e^{i phi} H") {
    CHECK(phase_defect_coin(0.0) == hadamard_coin());

    const CoinOperator c = phase_defect_coin(pi / 4);
    const Amplitude p = std::polar(1.0, pi / 4);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(close(c.u00(), p * s));
    CHECK(close(c.u01(), p * s));
    CHECK(close(c.u10(), p * s));
    CHECK(close(c.u11(), -p * s));

    const CoinOperator minus_h = phase_defect_coin(pi);
    CHECK(close(minus_h.u00(), -s, 1e-15));
    CHECK(close(minus_h.u11(), s, 1e-15));
}

TEST_CASE("coin map lookups") {
    const CoinMap hqw = iqw_coin_map(0.0);
    CHECK(hqw.at(0) == hqw.default_coin());
    CHECK(hqw.at(0) == hadamard_coin());

    const CoinMap iqw = iqw_coin_map(pi / 4);
    CHECK(iqw.at(5) == hadamard_coin());
    CHECK(iqw.at(-3) == hadamard_coin());
    CHECK(iqw.at(0) == phase_defect_coin(pi / 4));
    CHECK(iqw.overrides().size() == 1);

    CoinMap m = CoinMap::uniform(CoinOperator::identity());
    m.set(2, hadamard_coin()).set(2, phase_defect_coin(1.0));
    CHECK(m.at(2) == phase_defect_coin(1.0));
}

TEST_CASE("non-unitary coins are rejected at construction") {
    CHECK_THROWS_AS(CoinOperator(1.0, 1.0, 0.0, 1.0), NotUnitary);
    CHECK_THROWS_AS(CoinOperator(0.5, 0.0, 0.0, 1.0), NotUnitary);
    CHECK_THROWS_AS(CoinOperator(std::nan(""), 0.0, 0.0, 1.0), NotUnitary);
    CHECK_NOTHROW(CoinOperator(0.0, 1.0, 1.0, 0.0));
}

TEST_CASE("random unitary coins are unitary") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k) {
        const CoinOperator c = random_unitary_coin(rng);
        CHECK(c.unitarity_error() < 1e-14);
    }
}
