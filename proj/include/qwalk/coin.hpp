#pragma once

#include <complex>
#include <map>
#include <random>
#include <utility>

namespace qwalk {

using Amplitude = std::complex<double>;

// Coin basis label: |0> moves the walker left, |1> moves it right.
enum class CoinBasis : int { zero = 0, one = 1 };

// 2x2 unitary acting on the coin (a, b) amplitudes of one lattice site.
// Unitarity is checked once, at construction.
class CoinOperator {
public:
    static constexpr double kUnitarityTolerance = 1e-12;

    // Throws NotUnitary if U^dagger U differs from I by more than the tolerance.
    CoinOperator(Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11);

    static CoinOperator identity();

    Amplitude u00() const { return u00_; }
    Amplitude u01() const { return u01_; }
    Amplitude u10() const { return u10_; }
    Amplitude u11() const { return u11_; }

    // (u00 a + u01 b, u10 a + u11 b)
    std::pair<Amplitude, Amplitude> apply(Amplitude a, Amplitude b) const {
        return {u00_ * a + u01_ * b, u10_ * a + u11_ * b};
    }

    // Largest entrywise deviation of U^dagger U from the identity.
    double unitarity_error() const;

    CoinOperator scaled_by_phase(double phase) const;

    bool operator==(const CoinOperator&) const = default;

private:
    Amplitude u00_, u01_, u10_, u11_;
};

// (1/sqrt2) [[1, 1], [1, -1]]
CoinOperator hadamard_coin();

// e^{i phi} H, the coin applied at the phase-defect site.
CoinOperator phase_defect_coin(double phi);

// Haar-style random SU(2) element times a random global phase.
CoinOperator random_unitary_coin(std::mt19937_64& rng);

// Assignment of a coin to every lattice position: one default plus a finite
// set of per-position overrides.
class CoinMap {
public:
    explicit CoinMap(CoinOperator default_coin) : default_coin_(default_coin) {}

    CoinMap& set(int position, CoinOperator coin);

    const CoinOperator& at(int position) const {
        auto it = overrides_.find(position);
        return it == overrides_.end() ? default_coin_ : it->second;
    }

    const CoinOperator& default_coin() const { return default_coin_; }
    const std::map<int, CoinOperator>& overrides() const { return overrides_; }

    static CoinMap uniform(CoinOperator coin) { return CoinMap(coin); }

private:
    CoinOperator default_coin_;
    std::map<int, CoinOperator> overrides_;
};

// Hadamard everywhere except e^{i phi} H at x = 0.  phi = 0 is the Hadamard walk.
CoinMap iqw_coin_map(double phi);

}  // namespace qwalk
