#include "ssmc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "ssmc/engine.hpp"
#include "ssmc/problem.hpp"

namespace ssmc::experiments {

namespace {

// run fn(i) for i in [0, count) on up to `threads` workers
template <class Fn>
void parallel_trials(std::size_t count, unsigned threads, Fn&& fn)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> team;
    const unsigned extra = unsigned(std::min<std::size_t>(threads, count)) - 1;
    for (unsigned i = 0; i < extra; ++i) team.emplace_back(worker);
    worker();
    for (auto& t : team) t.join();
}

struct TrialOutcome {
    std::int64_t first_hit = -1;
    bool hit_by_half = false;
    bool extinct = false;
    double terminal_p_zero = 0;
};

TrialOutcome obstruction_trial(int n, const ObstructionConfig& cfg, std::uint64_t seed)
{
    const auto problem = make_spiked_problem(n, cfg.c_const);
    // the operator's (1/n)L term fixes the hop coefficient; the potential
    // carries its own schedule, so the event coefficient stays at 1
    Schedule sched = Schedule::constant_ab(1.0 / n, 1.0, cfg.steps);

    EngineConfig ec;
    ec.seed = seed;
    ec.walkers = cfg.walkers;
    ec.gain = cfg.gain;
    ec.record_trace = false;

    TrialOutcome out;
    const std::uint32_t half = cfg.steps / 2;
    auto observe = [&](const StepStats& st, const std::vector<std::uint64_t>& states) {
        if (out.first_hit >= 0) return;
        for (std::uint64_t v : states) {
            if (v == 0) {
                out.first_hit = st.step;
                out.hit_by_half = st.step <= half;
                return;
            }
        }
    };
    const auto result = run(problem, sched, ec, observe);
    out.extinct = result.extinct;
    if (!result.final_states.empty()) {
        std::size_t zeros = 0;
        for (std::uint64_t v : result.final_states) zeros += v == 0;
        out.terminal_p_zero = double(zeros) / double(result.final_states.size());
    }
    return out;
}

} // namespace

std::vector<ObstructionRow> run_obstruction(const ObstructionConfig& cfg)
{
    if (cfg.trials < 1) throw std::invalid_argument("run_obstruction: trials must be >= 1");
    std::vector<ObstructionRow> rows;
    for (std::size_t ni = 0; ni < cfg.ns.size(); ++ni) {
        const int n = cfg.ns[ni];
        if (n < 1 || n > 64)
            throw std::invalid_argument("run_obstruction: n must be in [1,64]");
        std::vector<TrialOutcome> outcomes(cfg.trials);
        parallel_trials(cfg.trials, cfg.threads, [&](std::size_t trial) {
            outcomes[trial] = obstruction_trial(n, cfg, derive_seed(cfg.seed, ni, trial));
        });

        ObstructionRow row;
        row.n = n;
        row.walkers = cfg.walkers;
        row.steps = cfg.steps;
        row.trials = cfg.trials;
        std::vector<std::int64_t> hits;
        double p_zero_sum = 0;
        for (const TrialOutcome& o : outcomes) {
            row.hits_by_half += o.hit_by_half;
            if (o.first_hit >= 0) { ++row.hits_total; hits.push_back(o.first_hit); }
            row.extinctions += o.extinct;
            p_zero_sum += o.terminal_p_zero;
        }
        row.hit_frac_half = double(row.hits_by_half) / double(cfg.trials);
        if (!hits.empty()) {
            std::sort(hits.begin(), hits.end());
            row.median_first_hit = hits[hits.size() / 2];
        }
        row.mean_terminal_p_zero = p_zero_sum / double(cfg.trials);

        const spectral::OracleRow oracle =
            spectral::oracle_row(n, 1.0, cfg.c_const, spectral::Model::spiked);
        row.oracle_p1_s1 = oracle.p1_zero;
        row.oracle_p2_s1 = oracle.p2_zero;
        rows.push_back(row);
    }
    return rows;
}

double default_clause_ratio(int k)
{
    if (k == 2) return 3.0;
    if (k == 3) return 4.26;
    throw std::invalid_argument("no default clause/variable ratio for k=" + std::to_string(k) +
                                "; supply one explicitly");
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg)
{
    if (cfg.instances < 1) throw std::invalid_argument("run_bench: instances must be >= 1");
    const double ratio = cfg.ratio > 0 ? cfg.ratio : default_clause_ratio(cfg.k);

    std::vector<BenchRow> rows;
    for (std::size_t ni = 0; ni < cfg.ns.size(); ++ni) {
        const int n = cfg.ns[ni];
        const std::uint64_t steps = cfg.have_coeffs
                                        ? runtime_from_coeffs(n, cfg.t_alpha, cfg.t_beta)
                                        : contest_runtime(n, cfg.k);
        const int m = std::max(1, int(std::lround(ratio * n)));
        const bool verify = n <= 24;

        std::vector<double> times(std::size_t(cfg.instances));
        std::vector<int> successes(std::size_t(cfg.instances), -1);
        parallel_trials(std::size_t(cfg.instances), cfg.threads, [&](std::size_t i) {
            const CnfFormula f = random_ksat(n, m, cfg.k, derive_seed(cfg.seed, 2 * ni, i));
            SolveConfig sc;
            sc.walkers = cfg.walkers;
            sc.steps = steps;
            sc.seed = derive_seed(cfg.seed, 2 * ni + 1, i);
            const auto t0 = std::chrono::steady_clock::now();
            const SolveOutcome out = solve_maxsat(f, sc);
            const auto t1 = std::chrono::steady_clock::now();
            times[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (verify)
                successes[i] = out.best_unsat == brute_force_optimum(f).best_unsat;
        });

        BenchRow row;
        row.n = n;
        row.k = cfg.k;
        row.instances = cfg.instances;
        row.steps = steps;
        std::sort(times.begin(), times.end());
        row.median_ms = times[times.size() / 2];
        row.verified = verify;
        if (verify) {
            int ok = 0;
            for (int s : successes) ok += s == 1;
            row.success_frac = double(ok) / double(cfg.instances);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace ssmc::experiments
