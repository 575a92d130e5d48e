#pragma once

#include <cstdint>
#include <vector>

#include "ssmc/cnf.hpp"
#include "ssmc/engine.hpp"
#include "ssmc/rng.hpp"

namespace ssmc {

// Per-walker incremental potential: per-clause satisfied-literal counts so a
// variable flip costs only its occurrence list.
class ClauseCache {
public:
    ClauseCache() = default;
    explicit ClauseCache(const CnfFormula& f) : formula_(&f) {}

    void rebuild(const Assignment& a);

    // flips var in a, updates the cache, returns the change in unsat count
    int flip(Assignment& a, std::int32_t var);

    int unsat() const { return unsat_; }

private:
    const CnfFormula* formula_ = nullptr;
    std::vector<std::uint8_t> true_count_;
    int unsat_ = 0;
};

struct MaxSatState {
    Assignment bits;
    ClauseCache cache;
};

// SSMC search problem over assignments of an immutable formula. States own
// their cache; spawning a walker copies it.
struct MaxSatProblem {
    using State = MaxSatState;

    const CnfFormula* formula;

    std::uint32_t degree(const State&) const { return std::uint32_t(formula->num_vars); }
    std::uint32_t max_degree() const { return std::uint32_t(formula->num_vars); }
    State neighbor(const State& st, std::uint32_t i) const
    {
        State next = st;
        next.cache.flip(next.bits, std::int32_t(i) + 1);
        return next;
    }
    double value(const State& st, double) const { return st.cache.unsat(); }
    State initial_state(StreamRng& rng) const;
};

// T = round(e^{alpha*n + beta}) with the calibrated per-width coefficients;
// only widths 2 and 3 have them.
std::uint64_t contest_runtime(int num_vars, int k);
std::uint64_t runtime_from_coeffs(int num_vars, double alpha, double beta);

struct SolveConfig {
    std::uint32_t walkers = 16;
    std::uint32_t target_size = 0; // population feedback target; 0 -> walkers
    std::uint64_t steps = 0;       // 0 -> contest_runtime(n, max clause width)
    std::uint64_t seed = 1;
    // Feedback gain and step cap calibrated on random MAX-2-SAT batches at the
    // contest budget: gain 0.005 / dt_max 0.3 maximizes solve rate; larger gain
    // overshoots the target population and raises the extinction rate sharply.
    double gain = 0.005;
    double safety = 0.9;
    double dt_max = 0.3;
    unsigned threads = 1;
};

struct SolveOutcome {
    Assignment best;
    int best_unsat = 0;
    std::uint32_t best_step = 0;
    std::vector<std::pair<std::uint32_t, int>> incumbents;
    std::uint64_t steps = 0;
    bool extinct = false;
    std::uint32_t extinction_step = 0;
};

// Linear-schedule SSMC over the assignment hypercube; best-ever assignment.
SolveOutcome solve_maxsat(const CnfFormula& f, const SolveConfig& cfg);

// uniform random k-SAT: k distinct variables per clause, fair coin signs
CnfFormula random_ksat(int num_vars, int num_clauses, int k, std::uint64_t seed);

struct BruteResult {
    int best_unsat = 0;
    Assignment argmin;
};
// Exhaustive optimum by Gray-code walk (one flip per assignment); n <= 24.
// Deliberately does not use ClauseCache so the two bookkeeping paths check
// each other.
BruteResult brute_force_optimum(const CnfFormula& f);

} // namespace ssmc
