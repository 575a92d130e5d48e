#include "ssmc/maxsat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ssmc {

void ClauseCache::rebuild(const Assignment& a)
{
    if (!formula_) throw std::logic_error("ClauseCache: no formula bound");
    true_count_.assign(formula_->clauses.size(), 0);
    unsat_ = 0;
    for (std::size_t ci = 0; ci < formula_->clauses.size(); ++ci) {
        std::uint8_t cnt = 0;
        for (std::int32_t lit : formula_->clauses[ci].lits) cnt += literal_true(a, lit);
        true_count_[ci] = cnt;
        unsat_ += cnt == 0;
    }
}

int ClauseCache::flip(Assignment& a, std::int32_t var)
{
    const int before = unsat_;
    flip_assignment_bit(a, var);
    const bool now_true = assignment_bit(a, var);
    for (const CnfFormula::Occurrence& o : formula_->occ[std::size_t(var)]) {
        // literal becomes true iff its polarity matches the new bit
        if (o.positive == now_true) {
            if (true_count_[o.clause]++ == 0) --unsat_;
        } else {
            if (--true_count_[o.clause] == 0) ++unsat_;
        }
    }
    return unsat_ - before;
}

MaxSatProblem::State MaxSatProblem::initial_state(StreamRng& rng) const
{
    State st;
    st.bits = make_assignment(formula->num_vars);
    for (auto& word : st.bits) word = rng.next_u64();
    const int tail = formula->num_vars & 63;
    if (tail && !st.bits.empty()) st.bits.back() &= (std::uint64_t(1) << tail) - 1;
    st.cache = ClauseCache(*formula);
    st.cache.rebuild(st.bits);
    return st;
}

std::uint64_t runtime_from_coeffs(int num_vars, double alpha, double beta)
{
    return std::uint64_t(std::llround(std::exp(alpha * num_vars + beta)));
}

std::uint64_t contest_runtime(int num_vars, int k)
{
    if (k == 2) return runtime_from_coeffs(num_vars, 0.022, 5.9);
    if (k == 3) return runtime_from_coeffs(num_vars, 0.035, 6.1);
    throw std::invalid_argument("contest_runtime: no calibrated coefficients for k=" +
                                std::to_string(k) + "; supply them explicitly");
}

SolveOutcome solve_maxsat(const CnfFormula& f, const SolveConfig& cfg)
{
    if (f.clauses.empty()) throw std::invalid_argument("solve_maxsat: empty formula");
    std::uint64_t steps = cfg.steps;
    if (steps == 0) {
        int width = 0;
        for (const Clause& c : f.clauses) width = std::max(width, int(c.lits.size()));
        steps = contest_runtime(f.num_vars, width);
    }
    if (steps > UINT32_MAX) throw std::invalid_argument("solve_maxsat: step count too large");

    MaxSatProblem problem{&f};
    EngineConfig ec;
    ec.seed = cfg.seed;
    ec.walkers = cfg.walkers;
    ec.target_size = cfg.target_size;
    ec.gain = cfg.gain;
    ec.safety = cfg.safety;
    ec.dt_max = cfg.dt_max;
    ec.threads = cfg.threads;
    ec.record_trace = false;
    const auto result = run(problem, Schedule::linear(std::uint32_t(steps)), ec);

    SolveOutcome out;
    out.best = result.best_state.bits;
    out.best_unsat = int(result.best_value);
    out.best_step = result.best_step;
    for (const auto& [step, value] : result.incumbents)
        out.incumbents.emplace_back(step, int(value));
    out.steps = steps;
    out.extinct = result.extinct;
    out.extinction_step = result.extinction_step;
    return out;
}

CnfFormula random_ksat(int num_vars, int num_clauses, int k, std::uint64_t seed)
{
    if (k < 1 || k > num_vars)
        throw std::invalid_argument("random_ksat: need 1 <= k <= num_vars");
    CnfFormula f;
    f.num_vars = num_vars;
    f.clauses.reserve(std::size_t(num_clauses));
    StreamRng rng(seed, 0x6B736174ull, 0); // one stream per formula
    std::vector<std::int32_t> vars(static_cast<std::size_t>(k));
    for (int ci = 0; ci < num_clauses; ++ci) {
        // rejection-sample k distinct variables
        for (int i = 0; i < k;) {
            const std::int32_t v = std::int32_t(rng.below(std::uint32_t(num_vars))) + 1;
            if (std::find(vars.begin(), vars.begin() + i, v) == vars.begin() + i)
                vars[std::size_t(i++)] = v;
        }
        Clause c;
        for (int i = 0; i < k; ++i)
            c.lits.push_back((rng.next_u32() & 1) ? vars[std::size_t(i)] : -vars[std::size_t(i)]);
        f.clauses.push_back(std::move(c));
    }
    f.build_occurrence_index();
    return f;
}

BruteResult brute_force_optimum(const CnfFormula& f)
{
    if (f.num_vars > 24)
        throw std::invalid_argument("brute_force_optimum: n > 24 would take too long");
    const std::uint64_t total = std::uint64_t(1) << f.num_vars;

    // independent per-clause bookkeeping (deliberately not ClauseCache)
    std::vector<std::int32_t> sat_lits(f.clauses.size(), 0);
    Assignment a = make_assignment(f.num_vars);
    int unsat = 0;
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        for (std::int32_t lit : f.clauses[ci].lits) sat_lits[ci] += lit < 0; // all-false start
        unsat += sat_lits[ci] == 0;
    }

    BruteResult best{unsat, a};
    for (std::uint64_t g = 1; g < total; ++g) {
        const int var = std::countr_zero(g) + 1; // Gray-code flip order
        flip_assignment_bit(a, var);
        const bool now = assignment_bit(a, var);
        for (const CnfFormula::Occurrence& o : f.occ[std::size_t(var)]) {
            if (o.positive == now) {
                if (sat_lits[o.clause]++ == 0) --unsat;
            } else {
                if (--sat_lits[o.clause] == 0) ++unsat;
            }
        }
        if (unsat < best.best_unsat) best = {unsat, a};
    }
    return best;
}

} // namespace ssmc
