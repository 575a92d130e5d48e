#include <benchmark/benchmark.h>

#include "ssmc/engine.hpp"
#include "ssmc/maxsat.hpp"
#include "ssmc/problem.hpp"

using namespace ssmc;

namespace {

// walker-step throughput on the spiked hypercube potential
void bm_engine_spiked(benchmark::State& state)
{
    const int n = int(state.range(0));
    const std::uint32_t walkers = std::uint32_t(state.range(1));
    const auto problem = make_spiked_problem(n, 2.0);
    const std::uint32_t steps = 64;
    EngineConfig cfg;
    cfg.walkers = walkers;
    cfg.record_trace = false;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        cfg.seed = seed++;
        const auto res = run(problem, Schedule::constant_ab(1.0 / n, 1.0, steps), cfg);
        benchmark::DoNotOptimize(res.total_hops);
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(walkers) * steps);
}

// full solver pass over a random 3-SAT instance, incremental clause cache on
void bm_solve_ksat(benchmark::State& state)
{
    const int n = int(state.range(0));
    const auto f = random_ksat(n, int(4.26 * n), 3, 11);
    SolveConfig cfg;
    cfg.steps = 256;
    std::uint64_t seed = 1;
    for (auto _ : state) {
        cfg.seed = seed++;
        const auto out = solve_maxsat(f, cfg);
        benchmark::DoNotOptimize(out.best_unsat);
    }
    state.SetItemsProcessed(state.iterations() * 256 * cfg.walkers);
}

} // namespace

BENCHMARK(bm_engine_spiked)->Args({16, 16})->Args({64, 16})->Args({64, 4096})->Args({64, 16384});
BENCHMARK(bm_solve_ksat)->Arg(50)->Arg(200);
