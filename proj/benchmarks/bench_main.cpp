#include <benchmark/benchmark.h>

#include <vector>

#include "omt/closure/brute_force.hpp"
#include "omt/closure/shortcut.hpp"
#include "omt/procedures/addis.hpp"
#include "omt/procedures/alpha_spending.hpp"
#include "omt/procedures/engine.hpp"
#include "omt/rng.hpp"
#include "omt/sim/simulate.hpp"

namespace {

std::vector<double> pvalue_stream(std::size_t n, std::uint64_t seed) {
    omt::CounterRng rng{seed, 0, omt::CounterRng::Role::stream};
    std::vector<double> p(n);
    for (double& x : p) {
        x = rng.uniform01() < 0.3 ? rng.uniform(0.0, 0.1) : rng.uniform01();
    }
    return p;
}

void BM_ShortcutClosedAlphaSpending(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const omt::AlphaSpendingFamily family{0.2, omt::GammaSequence::inverse_square()};
    const std::vector<double> p = pvalue_stream(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(omt::shortcut_run(family, p));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

void BM_ClosedAddisEngine(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::vector<double> p = pvalue_stream(n, 8);
    for (auto _ : state) {
        omt::ClosedAddisSpendingEngine engine{
            0.2, omt::GammaSequence::inverse_square(), omt::LagStructure::batched(10),
            omt::AddisParams::constants(0.8, 0.3)};
        for (double x : p) benchmark::DoNotOptimize(engine.step(x));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

void BM_BruteForceClosure(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const omt::AddisFamily family{0.2, omt::GammaSequence::inverse_square(),
                                  omt::LagStructure::batched(2),
                                  omt::AddisParams::constants(0.8, 0.3)};
    const std::vector<double> p = pvalue_stream(n, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(omt::brute_force_closed(family, p));
    }
}

void BM_GenerateTrial(benchmark::State& state) {
    omt::sim::SimConfig cfg;
    cfg.n = static_cast<std::size_t>(state.range(0));
    cfg.batch = 10;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(omt::sim::generate_trial(cfg, trial++));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cfg.n));
}

} // namespace

BENCHMARK(BM_ShortcutClosedAlphaSpending)->Arg(100)->Arg(1000);
BENCHMARK(BM_ClosedAddisEngine)->Arg(1000)->Arg(10000);
BENCHMARK(BM_BruteForceClosure)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_GenerateTrial)->Arg(1000);

BENCHMARK_MAIN();
