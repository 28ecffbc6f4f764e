#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

using StepKernel = std::function<WalkState(const WalkState&, const CoinMap&)>;

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int oracle_instances = 200;
    int long_run_steps = 1000;
    std::uint64_t seed = 20240101;
};

// Oracle-equivalence and invariant checks against a step kernel.  Every
// evolution inside goes through `kernel`, so a broken kernel shows up as a
// failed check.
std::vector<CheckResult> run_verification(const StepKernel& kernel, const VerifyOptions& options = {});

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qwalk
