#pragma once

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/walk_state.hpp"

// Brute-force cross-check of the stepping engine.  Everything here works on
// the full coin (x) position space truncated to x in [-t_max, t_max] and
// never calls into evolution.hpp.
namespace qwalk::oracle {

// Flattened joint state; entry coin * (2 t_max + 1) + (x + t_max).
struct DenseVector {
    int t_max = 0;
    Eigen::VectorXcd entries;

    int lattice_size() const { return 2 * t_max + 1; }
    Eigen::Index index(CoinBasis coin, int x) const;
    Amplitude at(CoinBasis coin, int x) const;
    // Largest |x| carrying a non-zero amplitude; -1 for the zero vector.
    int support_radius() const;
};

struct DenseUnitary {
    int t_max = 0;
    Eigen::MatrixXcd matrix;
};

// U = sum_x S_x [C(x) (x) I] with S_x = |0><0| (x) |x-1><x| + |1><1| (x) |x+1><x|.
// Amplitude shifted past |x| = t_max is dropped, so the edge columns are not
// unitary.
DenseUnitary build_step_unitary(int t_max, const CoinMap& coins);

// Max |(U^dagger U - I)_{ij}| over columns i, j whose position lies strictly
// inside the lattice.
double interior_unitarity_error(const DenseUnitary& u);

// Embeds a WalkState into the dense space; throws TruncationViolation when the
// state's support does not fit.
DenseVector to_dense(const WalkState& state, int t_max);

DenseVector localized_state(int t_max, Amplitude a0, Amplitude b0);

// U^steps |initial>.  Requires steps <= t_max - support_radius(initial), so
// no step is ever applied to amplitude sitting on the truncated edge; throws
// TruncationViolation otherwise.
DenseVector oracle_evolve(const DenseVector& initial, const DenseUnitary& u, int steps);

CoinDensity reduced_coin_density(const DenseVector& v);

// max over (coin, x) of |dense - state| (state zero outside its support).
double max_abs_difference(const DenseVector& dense, const WalkState& state);

// Classical symmetric random walk: P(x) = C(t, (t+x)/2) / 2^t on x = -t, -t+2, ..., t.
ProbVector crw_distribution(int t);

}  // namespace qwalk::oracle
