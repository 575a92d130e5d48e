#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <vector>

#include "ssmc/graph.hpp"
#include "ssmc/rng.hpp"
#include "ssmc/schedule.hpp"

namespace ssmc {

// A search problem exposes an implicit graph plus a (possibly s-dependent)
// potential. The engine never enumerates vertices, only local moves.
template <class P>
concept SearchProblem = requires(const P& p, const typename P::State& st, std::uint32_t i,
                                 double s, StreamRng& rng) {
    typename P::State;
    { p.degree(st) } -> std::convertible_to<std::uint32_t>;
    { p.max_degree() } -> std::convertible_to<std::uint32_t>;
    { p.neighbor(st, i) } -> std::same_as<typename P::State>;
    { p.value(st, s) } -> std::convertible_to<double>;
    { p.initial_state(rng) } -> std::same_as<typename P::State>;
};

// Fixed potential table over an explicit graph.
struct ExplicitGraphProblem {
    using State = std::uint32_t;

    const ExplicitGraph* graph;
    std::vector<double> potential; // indexed by vertex

    std::uint32_t degree(State v) const { return graph->degree(v); }
    std::uint32_t max_degree() const { return graph->max_degree(); }
    State neighbor(State v, std::uint32_t i) const { return graph->neighbors(v)[i]; }
    double value(State v, double) const { return potential[v]; }
    State initial_state(StreamRng& rng) const { return rng.below(graph->order()); }
};

// n-bit hypercube with a caller-supplied potential functor f(vertex, s).
template <class PotentialF>
struct HypercubeProblem {
    using State = std::uint64_t;

    int n;
    PotentialF pot;

    std::uint32_t degree(State) const { return std::uint32_t(n); }
    std::uint32_t max_degree() const { return std::uint32_t(n); }
    State neighbor(State v, std::uint32_t i) const { return v ^ (State(1) << i); }
    double value(State v, double s) const { return pot(v, s); }
    State initial_state(StreamRng& rng) const
    {
        const State mask = n >= 64 ? ~State(0) : ((State(1) << n) - 1);
        return rng.next_u64() & mask;
    }
};

// Hamming ramp with a well at the all-zeros vertex. The 1/n Laplacian factor
// of the underlying operator lives in the hop coefficient (a = 1/n), not here.
struct SpikedPotential {
    int n;
    double b_const;
    double c_const;

    double operator()(std::uint64_t v, double s) const
    {
        double val = ramp_b(s, b_const) / n * std::popcount(v);
        if (v == 0) val -= ramp_c(s, c_const);
        return val;
    }
};

inline HypercubeProblem<SpikedPotential> make_spiked_problem(int n, double c_const)
{
    return {n, SpikedPotential{n, b_constant(n), c_const}};
}

} // namespace ssmc
