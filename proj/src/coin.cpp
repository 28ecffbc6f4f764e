#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

double deviation_from_identity(Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11) {
    // (U^dagger U)_{ij} = sum_k conj(U_{ki}) U_{kj}
    const Amplitude g00 = std::conj(u00) * u00 + std::conj(u10) * u10;
    const Amplitude g01 = std::conj(u00) * u01 + std::conj(u10) * u11;
    const Amplitude g11 = std::conj(u01) * u01 + std::conj(u11) * u11;
    return std::max({std::abs(g00 - 1.0), std::abs(g01), std::abs(g11 - 1.0)});
}

}  // namespace

CoinOperator::CoinOperator(Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11)
    : u00_(u00), u01_(u01), u10_(u10), u11_(u11) {
    const double err = deviation_from_identity(u00, u01, u10, u11);
    if (!(err <= kUnitarityTolerance)) {
        throw NotUnitary("coin operator is not unitary (max |U^dagger U - I| = " +
                         std::to_string(err) + ")");
    }
}

CoinOperator CoinOperator::identity() { return {1.0, 0.0, 0.0, 1.0}; }

double CoinOperator::unitarity_error() const {
    return deviation_from_identity(u00_, u01_, u10_, u11_);
}

CoinOperator CoinOperator::scaled_by_phase(double phase) const {
    const Amplitude p = std::polar(1.0, phase);
    return {p * u00_, p * u01_, p * u10_, p * u11_};
}

CoinOperator hadamard_coin() {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    return {h, h, h, -h};
}

CoinOperator phase_defect_coin(double phi) { return hadamard_coin().scaled_by_phase(phi); }

CoinOperator random_unitary_coin(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // cos^2(gamma) uniform on [0,1] gives the Haar measure on SU(2) up to phases.
    const double c = std::sqrt(unit(rng));
    const double s = std::sqrt(1.0 - c * c);
    const Amplitude e_beta = std::polar(1.0, angle(rng));
    const Amplitude e_delta = std::polar(1.0, angle(rng));
    const CoinOperator su2(e_beta * c, e_delta * s, -std::conj(e_delta) * s, std::conj(e_beta) * c);
    return su2.scaled_by_phase(angle(rng));
}

CoinMap& CoinMap::set(int position, CoinOperator coin) {
    overrides_.insert_or_assign(position, coin);
    return *this;
}

CoinMap iqw_coin_map(double phi) {
    CoinMap map(hadamard_coin());
    map.set(0, phase_defect_coin(phi));
    return map;
}

}  // namespace qwalk
