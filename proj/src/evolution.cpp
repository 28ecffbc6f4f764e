#include "qwalk/evolution.hpp"

#include <cstddef>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

// x*y + u*v with the textbook product.  Plain operator* keeps a NaN/Inf
// recovery branch that GCC compiles to an out-of-line call on this path.
inline Amplitude mul_add(Amplitude x, Amplitude y, Amplitude u, Amplitude v) {
    return {x.real() * y.real() - x.imag() * y.imag() + (u.real() * v.real() - u.imag() * v.imag()),
            x.real() * y.imag() + x.imag() * y.real() + (u.real() * v.imag() + u.imag() * v.real())};
}

// Source slot i (position x = i - t) feeds a'[i] (x-1 at t+1) and b'[i+2]
// (x+1 at t+1).  Each source writes two targets nobody else writes, so the
// loop carries no dependence.  Only even i can be occupied.
void coin_and_shift(std::span<const Amplitude> a, std::span<const Amplitude> b,
                    const CoinOperator& coin, std::vector<Amplitude>& next_a,
                    std::vector<Amplitude>& next_b) {
    const auto n = static_cast<std::ptrdiff_t>(a.size());
    const Amplitude c00 = coin.u00(), c01 = coin.u01(), c10 = coin.u10(), c11 = coin.u11();
    Amplitude* out_a = next_a.data();
    Amplitude* out_b = next_b.data();
#pragma omp parallel for schedule(static) if (n >= kParallelMinSites)
    for (std::ptrdiff_t i = 0; i < n; i += 2) {
        out_a[i] = mul_add(c00, a[i], c01, b[i]);
        out_b[i + 2] = mul_add(c10, a[i], c11, b[i]);
    }
}

void step_into(const WalkState& state, const CoinMap& coins, std::vector<Amplitude>& next_a,
               std::vector<Amplitude>& next_b) {
    const int t = state.t();
    const auto next_size = static_cast<std::size_t>(2 * t + 3);
    next_a.assign(next_size, Amplitude{});
    next_b.assign(next_size, Amplitude{});

    const auto a = state.amp0();
    const auto b = state.amp1();
    coin_and_shift(a, b, coins.default_coin(), next_a, next_b);

    // Re-do the handful of sites carrying a non-default coin.
    for (const auto& [x, coin] : coins.overrides()) {
        if (x < -t || x > t || ((x + t) & 1) != 0) continue;
        const auto i = static_cast<std::size_t>(x + t);
        const auto [ca, cb] = coin.apply(a[i], b[i]);
        next_a[i] = ca;
        next_b[i + 2] = cb;
    }
}

}  // namespace

WalkState step(const WalkState& state, const CoinMap& coins) {
    std::vector<Amplitude> next_a, next_b;
    step_into(state, coins, next_a, next_b);
    return {state.t() + 1, std::move(next_a), std::move(next_b)};
}

WalkState evolve(const WalkState& state, const CoinMap& coins, int steps) {
    if (steps < 0) throw InvalidArgument("steps must be non-negative");
    WalkState current = state;
    for (int s = 0; s < steps; ++s) current = step(current, coins);
    return current;
}

namespace reference {

WalkState step(const WalkState& state, const CoinMap& coins) {
    const int t = state.t();
    const std::size_t n = state.size();
    std::vector<Amplitude> next_a(n + 2), next_b(n + 2);
    const auto a = state.amp0();
    const auto b = state.amp1();
    for (std::size_t i = 0; i < n; ++i) {
        const int x = static_cast<int>(i) - t;
        const auto [ca, cb] = coins.at(x).apply(a[i], b[i]);
        // new index of position x-1 at step t+1 is (x-1)+(t+1) = i
        next_a[i] += ca;
        next_b[i + 2] += cb;
    }
    return {t + 1, std::move(next_a), std::move(next_b)};
}

WalkState evolve(const WalkState& state, const CoinMap& coins, int steps) {
    if (steps < 0) throw InvalidArgument("steps must be non-negative");
    WalkState current = state;
    for (int s = 0; s < steps; ++s) current = reference::step(current, coins);
    return current;
}

}  // namespace reference

}  // namespace qwalk
