#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

// One application of U = sum_x S_x [C(x) (x) I]: every site's (a, b) goes
// through its coin, then the |0> part moves to x-1 and the |1> part to x+1.
// The site loop runs under OpenMP once the lattice is large enough.
WalkState step(const WalkState& state, const CoinMap& coins);

// `steps` repeated applications of step().
WalkState evolve(const WalkState& state, const CoinMap& coins, int steps);

namespace reference {

// Straight serial loop over every stored slot; kept as the baseline the
// parallel kernel is tested and benchmarked against.
WalkState step(const WalkState& state, const CoinMap& coins);

WalkState evolve(const WalkState& state, const CoinMap& coins, int steps);

}  // namespace reference

}  // namespace qwalk
