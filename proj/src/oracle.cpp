#include "qwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk::oracle {

Eigen::Index DenseVector::index(CoinBasis coin, int x) const {
    return static_cast<Eigen::Index>(static_cast<int>(coin) * lattice_size() + x + t_max);
}

Amplitude DenseVector::at(CoinBasis coin, int x) const {
    if (x < -t_max || x > t_max) return {};
    return entries[index(coin, x)];
}

int DenseVector::support_radius() const {
    int radius = -1;
    for (int x = -t_max; x <= t_max; ++x) {
        if (at(CoinBasis::zero, x) != Amplitude{} || at(CoinBasis::one, x) != Amplitude{}) {
            radius = std::max(radius, std::abs(x));
        }
    }
    return radius;
}

DenseUnitary build_step_unitary(int t_max, const CoinMap& coins) {
    if (t_max < 1) throw InvalidArgument("t_max must be at least 1");
    const int sites = 2 * t_max + 1;
    const Eigen::Index dim = 2 * sites;
    DenseUnitary u{t_max, Eigen::MatrixXcd::Zero(dim, dim)};
    auto idx = [&](int coin, int x) { return static_cast<Eigen::Index>(coin * sites + x + t_max); };

    for (int x = -t_max; x <= t_max; ++x) {
        const CoinOperator& c = coins.at(x);
        const Amplitude entries[2][2] = {{c.u00(), c.u01()}, {c.u10(), c.u11()}};
        for (int in = 0; in < 2; ++in) {
            // coin |0> goes to x-1, coin |1> to x+1
            if (x - 1 >= -t_max) u.matrix(idx(0, x - 1), idx(in, x)) += entries[0][in];
            if (x + 1 <= t_max) u.matrix(idx(1, x + 1), idx(in, x)) += entries[1][in];
        }
    }
    return u;
}

double interior_unitarity_error(const DenseUnitary& u) {
    const int sites = 2 * u.t_max + 1;
    const Eigen::MatrixXcd gram = u.matrix.adjoint() * u.matrix;
    double err = 0.0;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        const int xi = static_cast<int>(i % sites) - u.t_max;
        if (std::abs(xi) >= u.t_max) continue;
        for (Eigen::Index j = 0; j < gram.cols(); ++j) {
            const int xj = static_cast<int>(j % sites) - u.t_max;
            if (std::abs(xj) >= u.t_max) continue;
            const Amplitude expected = i == j ? 1.0 : 0.0;
            err = std::max(err, std::abs(gram(i, j) - expected));
        }
    }
    return err;
}

DenseVector to_dense(const WalkState& state, int t_max) {
    if (state.t() > t_max) {
        throw TruncationViolation("state support |x| <= " + std::to_string(state.t()) +
                                  " exceeds t_max = " + std::to_string(t_max));
    }
    DenseVector v{t_max, Eigen::VectorXcd::Zero(2 * (2 * t_max + 1))};
    for (int x = -state.t(); x <= state.t(); ++x) {
        v.entries[v.index(CoinBasis::zero, x)] = state.amplitude(x, CoinBasis::zero);
        v.entries[v.index(CoinBasis::one, x)] = state.amplitude(x, CoinBasis::one);
    }
    return v;
}

DenseVector localized_state(int t_max, Amplitude a0, Amplitude b0) {
    DenseVector v{t_max, Eigen::VectorXcd::Zero(2 * (2 * t_max + 1))};
    v.entries[v.index(CoinBasis::zero, 0)] = a0;
    v.entries[v.index(CoinBasis::one, 0)] = b0;
    return v;
}

DenseVector oracle_evolve(const DenseVector& initial, const DenseUnitary& u, int steps) {
    if (steps < 0) throw InvalidArgument("steps must be non-negative");
    if (initial.t_max != u.t_max) throw InvalidArgument("vector and unitary lattices differ");
    const int radius = std::max(0, initial.support_radius());
    // Every column touched must be an interior (unitary) one.
    if (steps > 0 && radius + steps > u.t_max) {
        throw TruncationViolation("evolving support radius " + std::to_string(radius) + " by " +
                                  std::to_string(steps) + " steps reaches the edge of t_max = " +
                                  std::to_string(u.t_max));
    }
    DenseVector v = initial;
    for (int s = 0; s < steps; ++s) v.entries = u.matrix * v.entries;
    return v;
}

CoinDensity reduced_coin_density(const DenseVector& v) {
    CoinDensity rho{0.0, 0.0, {}};
    for (int x = -v.t_max; x <= v.t_max; ++x) {
        const Amplitude a = v.at(CoinBasis::zero, x);
        const Amplitude b = v.at(CoinBasis::one, x);
        rho.A += std::norm(a);
        rho.B += std::norm(b);
        rho.C += a * std::conj(b);
    }
    return rho;
}

double max_abs_difference(const DenseVector& dense, const WalkState& state) {
    double diff = 0.0;
    const int reach = std::max(dense.t_max, state.t());
    for (int x = -reach; x <= reach; ++x) {
        for (CoinBasis c : {CoinBasis::zero, CoinBasis::one}) {
            diff = std::max(diff, std::abs(dense.at(c, x) - state.amplitude(x, c)));
        }
    }
    return diff;
}

ProbVector crw_distribution(int t) {
    if (t < 0) throw InvalidArgument("t must be non-negative");
    // Unnormalised binomial weights grown outward from the central term, so
    // nothing under- or overflows for large t; normalised at the end.
    const int mid = t / 2;
    std::vector<double> w(static_cast<std::size_t>(t + 1));
    w[mid] = 1.0;
    for (int k = mid; k < t; ++k) w[k + 1] = w[k] * (t - k) / (k + 1.0);
    for (int k = mid; k > 0; --k) w[k - 1] = w[k] * k / (t - k + 1.0);
    double total = 0.0;
    for (double v : w) total += v;

    ProbVector p;
    for (int k = 0; k <= t; ++k) {
        p.positions.push_back(2 * k - t);
        p.probs.push_back(w[k] / total);
    }
    return p;
}

}  // namespace qwalk::oracle
