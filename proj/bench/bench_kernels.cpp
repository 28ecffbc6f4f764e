// OpenMP kernels against their serial references.  Range argument is the
// step count t of the walk state (2t+1 lattice slots) or the sweep grid size.

#include <benchmark/benchmark.h>

#include <numbers>

#include "qwalk/analysis.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;
using std::numbers::pi;

namespace {

WalkState evolved(int t) { return evolve(balanced_initial_state(pi / 2), iqw_coin_map(pi / 4), t); }

void BM_step(benchmark::State& st) {
    const WalkState s = evolved(static_cast<int>(st.range(0)));
    const CoinMap coins = iqw_coin_map(pi / 4);
    for (auto _ : st) benchmark::DoNotOptimize(step(s, coins));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(s.size()));
}

void BM_step_reference(benchmark::State& st) {
    const WalkState s = evolved(static_cast<int>(st.range(0)));
    const CoinMap coins = iqw_coin_map(pi / 4);
    for (auto _ : st) benchmark::DoNotOptimize(reference::step(s, coins));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(s.size()));
}

void BM_coin_density(benchmark::State& st) {
    const WalkState s = evolved(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(reduced_coin_density(s));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(s.size()));
}

void BM_coin_density_reference(benchmark::State& st) {
    const WalkState s = evolved(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(reference::reduced_coin_density(s));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(s.size()));
}

void BM_sweep(benchmark::State& st) {
    const auto grid = analysis::uniform_angles(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(analysis::entropy_sweep(50, grid, grid));
}

void BM_sweep_reference(benchmark::State& st) {
    const auto grid = analysis::uniform_angles(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(analysis::reference::entropy_sweep(50, grid, grid));
}

}  // namespace

BENCHMARK(BM_step)->RangeMultiplier(8)->Range(64, 1 << 13);
BENCHMARK(BM_step_reference)->RangeMultiplier(8)->Range(64, 1 << 13);
BENCHMARK(BM_coin_density)->RangeMultiplier(8)->Range(64, 1 << 13);
BENCHMARK(BM_coin_density_reference)->RangeMultiplier(8)->Range(64, 1 << 13);
BENCHMARK(BM_sweep)->Arg(11)->Arg(41);
BENCHMARK(BM_sweep_reference)->Arg(11)->Arg(41);

BENCHMARK_MAIN();
