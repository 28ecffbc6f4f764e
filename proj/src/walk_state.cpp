#include "qwalk/walk_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

WalkState::WalkState(int t, std::vector<Amplitude> amp0, std::vector<Amplitude> amp1)
    : t_(t), amp0_(std::move(amp0)), amp1_(std::move(amp1)) {
    if (t_ < 0) throw InvalidArgument("step count must be non-negative");
    const auto expected = static_cast<std::size_t>(2 * t_ + 1);
    if (amp0_.size() != expected || amp1_.size() != expected) {
        throw InvalidArgument("amplitude arrays must have length 2t+1 = " +
                              std::to_string(expected));
    }
}

Amplitude WalkState::amplitude(int x, CoinBasis coin) const {
    if (x < -t_ || x > t_) return {0.0, 0.0};
    const auto i = static_cast<std::size_t>(x + t_);
    return coin == CoinBasis::zero ? amp0_[i] : amp1_[i];
}

double WalkState::norm_squared() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < amp0_.size(); ++i) sum += std::norm(amp0_[i]) + std::norm(amp1_[i]);
    return sum;
}

WalkState WalkState::with_global_phase(double alpha) const {
    const Amplitude phase = std::polar(1.0, alpha);
    std::vector<Amplitude> a(amp0_), b(amp1_);
    for (auto& v : a) v *= phase;
    for (auto& v : b) v *= phase;
    return {t_, std::move(a), std::move(b)};
}

WalkState balanced_initial_state(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    constexpr double h = std::numbers::sqrt2 / 2.0;
    return {0, {Amplitude(h, 0.0)}, {std::polar(h, theta)}};
}

WalkState general_initial_state(Amplitude a0, Amplitude b0) {
    const double norm = std::norm(a0) + std::norm(b0);
    if (!(std::abs(norm - 1.0) <= 1e-9)) {
        throw NotNormalized("initial coin state has |a|^2+|b|^2 = " + std::to_string(norm));
    }
    return {0, {a0}, {b0}};
}

Amplitude amplitude(const WalkState& state, int x, CoinBasis coin) {
    return state.amplitude(x, coin);
}

}  // namespace qwalk
