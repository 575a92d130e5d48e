#include <benchmark/benchmark.h>

#include "ssmc/schedule.hpp"
#include "ssmc/spectral.hpp"

using namespace ssmc::spectral;

namespace {

// one full oracle row: two bisected eigenvalues, twisted ground vector, and
// both probability functionals
void bm_oracle_row(benchmark::State& state)
{
    const int n = int(state.range(0));
    for (auto _ : state) {
        const auto row = oracle_row(n, 0.75, 2.0, Model::spiked);
        benchmark::DoNotOptimize(row.p1_zero);
    }
}

void bm_ground_pair(benchmark::State& state)
{
    const int n = int(state.range(0));
    const auto blk = build_symmetric_block(n, 1.0, ssmc::b_constant(n), 2.0, Model::spiked);
    for (auto _ : state) {
        const auto g = ground_pair(blk);
        benchmark::DoNotOptimize(g.gap);
    }
}

} // namespace

BENCHMARK(bm_oracle_row)->Arg(100)->Arg(500)->Arg(2000);
BENCHMARK(bm_ground_pair)->Arg(100)->Arg(500)->Arg(2000);
