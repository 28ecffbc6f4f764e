#pragma once

#include <span>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// Joint coin-position state after t steps of a walk started at x = 0.
//
// Storage is dense over x in [-t, t]: index i holds position x = i - t.  Slots
// with x + t odd are structurally zero and kept only to make the index
// arithmetic trivial.  A WalkState is immutable once built; stepping returns
// a new value.
class WalkState {
public:
    // Takes ownership of the two amplitude arrays; both must have length 2t+1.
    WalkState(int t, std::vector<Amplitude> amp0, std::vector<Amplitude> amp1);

    int t() const { return t_; }
    // Position stored at array index 0.
    int offset() const { return -t_; }
    int min_position() const { return -t_; }
    int max_position() const { return t_; }
    std::size_t size() const { return amp0_.size(); }

    std::span<const Amplitude> amp0() const { return amp0_; }
    std::span<const Amplitude> amp1() const { return amp1_; }

    // Stored amplitude, or exact zero outside [-t, t].
    Amplitude amplitude(int x, CoinBasis coin) const;

    // Sum over x of |a|^2 + |b|^2.
    double norm_squared() const;

    // Multiply every amplitude by e^{i alpha}.
    WalkState with_global_phase(double alpha) const;

private:
    int t_;
    std::vector<Amplitude> amp0_;
    std::vector<Amplitude> amp1_;
};

// (|0> + e^{i theta}|1>)/sqrt2 at x = 0; theta is reduced mod 2 pi.
WalkState balanced_initial_state(double theta);

// a0|0> + b0|1> at x = 0.  Throws NotNormalized unless |a0|^2+|b0|^2 = 1 within 1e-9.
WalkState general_initial_state(Amplitude a0, Amplitude b0);

Amplitude amplitude(const WalkState& state, int x, CoinBasis coin);

}  // namespace qwalk
