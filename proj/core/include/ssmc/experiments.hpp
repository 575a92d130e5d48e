#pragma once

#include <cstdint>
#include <vector>

#include "ssmc/maxsat.hpp"
#include "ssmc/spectral.hpp"

// Batch experiment drivers shared by the CLI and the acceptance tests.
// Trials fan out over a thread pool; every trial draws its own derived seed
// and results are aggregated in trial order, so output is independent of
// parallelism.

namespace ssmc::experiments {

struct ObstructionConfig {
    std::vector<int> ns{16, 24, 32, 48, 64};
    std::uint32_t walkers = 16;
    std::uint32_t steps = 360;
    std::uint32_t trials = 500;
    double c_const = 2.0;
    // Calibrated like SolveConfig::gain: at 1.0 the feedback overshoots and
    // ~85% of 16-walker trials die out; at 0.005 extinction drops to ~10%.
    double gain = 0.005;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct ObstructionRow {
    int n = 0;
    std::uint32_t walkers = 0, steps = 0, trials = 0;
    std::uint32_t hits_by_half = 0;  // trials where some walker reached 0...0 by s=1/2
    std::uint32_t hits_total = 0;    // ... at any point of the anneal
    std::uint32_t extinctions = 0;
    double hit_frac_half = 0;
    std::int64_t median_first_hit = -1; // over trials that hit at all
    double mean_terminal_p_zero = 0;    // empirical occupation of 0...0 at s=1
    double oracle_p1_s1 = 0, oracle_p2_s1 = 0;
};

std::vector<ObstructionRow> run_obstruction(const ObstructionConfig& cfg);

struct BenchConfig {
    int k = 2;
    std::vector<int> ns{12, 16, 20};
    int instances = 20;
    double ratio = 0;        // clauses per variable; 0 -> per-k default (k=2: 3.0, k=3: 4.26)
    double t_alpha = 0, t_beta = 0;
    bool have_coeffs = false; // required for k outside {2,3}
    std::uint32_t walkers = 16;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct BenchRow {
    int n = 0, k = 0, instances = 0;
    std::uint64_t steps = 0;
    double median_ms = 0;     // wall time; excluded from determinism comparisons
    double success_frac = -1; // brute-force verified share; -1 when n > 24
    bool verified = false;
};

std::vector<BenchRow> run_bench(const BenchConfig& cfg);

double default_clause_ratio(int k);

} // namespace ssmc::experiments
