#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssmc/pool.hpp"
#include "ssmc/problem.hpp"
#include "ssmc/rng.hpp"
#include "ssmc/schedule.hpp"

// Substochastic walker population. Per step every walker independently hops
// to a uniform neighbor with probability a*dt each, otherwise dies or spawns
// a copy at its own vertex with probability |b*dt*(w - <W> + E)| (dies when
// above the shifted mean, spawns when below), otherwise stays put. The
// quasistationary population is proportional to the ground state of
// a*L + b*W, i.e. amplitude- rather than measurement-distributed.

namespace ssmc {

struct EngineConfig {
    std::uint64_t seed = 1;
    std::uint32_t walkers = 16;
    std::uint32_t target_size = 0; // 0 -> walkers
    double gain = 1.0;             // energy-offset feedback; 0 disables
    double safety = 0.9;
    double dt_max = 1.0;
    unsigned threads = 1;
    bool record_trace = true;
};

struct StepStats {
    std::uint32_t step = 0;
    double s = 0, dt = 0;
    double mean_potential = 0, offset = 0;
    double w_min = 0, w_max = 0;
    std::uint64_t size_before = 0, size_after = 0;
    std::uint32_t deaths = 0, spawns = 0, hops = 0;
};

template <class State>
struct RunResult {
    State best_state{};
    double best_value = std::numeric_limits<double>::infinity();
    std::uint32_t best_step = 0;
    std::vector<std::pair<std::uint32_t, double>> incumbents; // (step, value) improvements
    bool extinct = false;
    std::uint32_t extinction_step = 0;
    double final_offset = 0;
    std::uint64_t total_deaths = 0, total_spawns = 0, total_hops = 0;
    std::vector<StepStats> trace;
    std::vector<State> final_states;
};

enum class EventKind : std::uint8_t { none, die, spawn };

struct StepProbabilities {
    double hop_each = 0;
    double stay = 1;
    double event = 0;
    EventKind kind = EventKind::none;
};

inline StepProbabilities step_probabilities(double a, double b, double dt, double w,
                                            std::uint32_t degree, double meanW, double offset)
{
    const double shifted = w - meanW + offset;
    StepProbabilities p;
    p.hop_each = a * dt;
    p.event = std::abs(b * dt * shifted);
    p.kind = shifted > 0 ? EventKind::die : (shifted < 0 ? EventKind::spawn : EventKind::none);
    const double used = p.hop_each * degree + p.event;
    if (used > 1.0 + 1e-12)
        throw std::runtime_error("timestep too large for walker energy w=" + std::to_string(w));
    p.stay = std::max(0.0, 1.0 - used);
    return p;
}

inline double update_energy_offset(std::uint64_t current_size, std::uint64_t target_size,
                                   double offset, double gain)
{
    return offset + gain * std::log(double(current_size) / double(target_size));
}

inline double choose_timestep(double a, double b, std::uint32_t d_max, double w_min, double w_max,
                              double meanW, double offset, double safety, double dt_max)
{
    const double dev = std::max(std::abs(w_max - meanW + offset), std::abs(w_min - meanW + offset));
    const double denom = a * d_max + b * dev;
    if (denom <= 0.0) return dt_max;
    return std::min(dt_max, safety / denom);
}

namespace detail {

enum : std::uint8_t { kStay = 0, kHop, kDie, kSpawn };

struct WalkerAction {
    std::uint32_t hop_index = 0;
    std::uint8_t kind = kStay;
};

// stream id reserved for drawing initial states
inline constexpr std::uint64_t kInitStream = 0xFFFFFFFFull;

} // namespace detail

// Observer is called after each step with the stats and post-step states.
template <SearchProblem P, class Observer>
RunResult<typename P::State> run(const P& problem, const Schedule& schedule,
                                 const EngineConfig& config, Observer&& observe)
{
    using State = typename P::State;
    if (config.walkers < 1) throw std::invalid_argument("run: need at least one walker");
    const std::uint64_t target = config.target_size ? config.target_size : config.walkers;
    const std::uint32_t T = schedule.steps;

    RunResult<State> result;
    std::vector<State> states;
    states.reserve(config.walkers * 2);
    for (std::uint32_t j = 0; j < config.walkers; ++j) {
        StreamRng rng(config.seed, detail::kInitStream, j);
        states.push_back(problem.initial_state(rng));
    }

    std::vector<double> values;
    std::vector<detail::WalkerAction> actions;
    double offset = 0.0;

    for (std::uint32_t t = 1; t <= T; ++t) {
        const double s = double(t) / double(T);
        const double a = schedule.a(s);
        const double b = schedule.b(s);
        const std::size_t size = states.size();

        // pre-step pass: potentials, mean/extremes, incumbent
        values.resize(size);
        const std::size_t nblocks = block_count(size);
        std::vector<double> part_sum(nblocks), part_min(nblocks), part_max(nblocks);
        std::vector<std::size_t> part_arg(nblocks);
        for_blocks(size, config.threads, [&](std::size_t blk, std::size_t lo, std::size_t hi) {
            double sum = 0, wmin = std::numeric_limits<double>::infinity(), wmax = -wmin;
            std::size_t arg = lo;
            for (std::size_t j = lo; j < hi; ++j) {
                const double w = problem.value(states[j], s);
                values[j] = w;
                sum += w;
                wmax = std::max(wmax, w);
                if (w < wmin) { wmin = w; arg = j; }
            }
            part_sum[blk] = sum;
            part_min[blk] = wmin;
            part_max[blk] = wmax;
            part_arg[blk] = arg;
        });
        double sum = 0, w_min = std::numeric_limits<double>::infinity(), w_max = -w_min;
        std::size_t best_j = 0;
        for (std::size_t blk = 0; blk < nblocks; ++blk) {
            sum += part_sum[blk];
            w_max = std::max(w_max, part_max[blk]);
            if (part_min[blk] < w_min) { w_min = part_min[blk]; best_j = part_arg[blk]; }
        }
        const double meanW = sum / double(size);
        if (values[best_j] < result.best_value) {
            result.best_value = values[best_j];
            result.best_state = states[best_j];
            result.best_step = t;
            result.incumbents.emplace_back(t, result.best_value);
        }

        offset = update_energy_offset(size, target, offset, config.gain);
        const double dt =
            choose_timestep(a, b, problem.max_degree(), w_min, w_max, meanW, offset,
                            config.safety, config.dt_max);

        // decide every walker's move from its own (seed, step, index) stream
        actions.resize(size);
        std::vector<std::uint32_t> part_deaths(nblocks), part_spawns(nblocks), part_hops(nblocks);
        for_blocks(size, config.threads, [&](std::size_t blk, std::size_t lo, std::size_t hi) {
            std::uint32_t deaths = 0, spawns = 0, hops = 0;
            for (std::size_t j = lo; j < hi; ++j) {
                const std::uint32_t deg = problem.degree(states[j]);
                const StepProbabilities p =
                    step_probabilities(a, b, dt, values[j], deg, meanW, offset);
                StreamRng rng(config.seed, t, j);
                const double u = rng.uniform();
                detail::WalkerAction act;
                const double hop_total = p.hop_each * deg;
                if (u < hop_total) {
                    act.kind = detail::kHop;
                    act.hop_index = std::min<std::uint32_t>(deg - 1, std::uint32_t(u / p.hop_each));
                    ++hops;
                } else if (u < hop_total + p.event) {
                    if (p.kind == EventKind::die) { act.kind = detail::kDie; ++deaths; }
                    else { act.kind = detail::kSpawn; ++spawns; }
                }
                actions[j] = act;
            }
            part_deaths[blk] = deaths;
            part_spawns[blk] = spawns;
            part_hops[blk] = hops;
        });

        StepStats stats;
        stats.step = t;
        stats.s = s;
        stats.dt = dt;
        stats.mean_potential = meanW;
        stats.offset = offset;
        stats.w_min = w_min;
        stats.w_max = w_max;
        stats.size_before = size;
        for (std::size_t blk = 0; blk < nblocks; ++blk) {
            stats.deaths += part_deaths[blk];
            stats.spawns += part_spawns[blk];
            stats.hops += part_hops[blk];
        }

        // apply serially, in walker order: children go right after their
        // parent and do not act until the next step
        std::vector<State> next;
        next.reserve(size + stats.spawns);
        for (std::size_t j = 0; j < size; ++j) {
            switch (actions[j].kind) {
            case detail::kStay: next.push_back(std::move(states[j])); break;
            case detail::kHop: next.push_back(problem.neighbor(states[j], actions[j].hop_index)); break;
            case detail::kDie: break;
            case detail::kSpawn:
                next.push_back(states[j]);
                next.push_back(std::move(states[j]));
                break;
            }
        }
        states = std::move(next);
        stats.size_after = states.size();

        result.total_deaths += stats.deaths;
        result.total_spawns += stats.spawns;
        result.total_hops += stats.hops;
        if (config.record_trace) result.trace.push_back(stats);
        observe(stats, states);

        if (states.empty()) {
            result.extinct = true;
            result.extinction_step = t;
            break;
        }
    }

    result.final_offset = offset;
    result.final_states = std::move(states);
    return result;
}

template <SearchProblem P>
RunResult<typename P::State> run(const P& problem, const Schedule& schedule,
                                 const EngineConfig& config)
{
    return run(problem, schedule, config,
               [](const StepStats&, const std::vector<typename P::State>&) {});
}

} // namespace ssmc
