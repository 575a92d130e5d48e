#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ssmc {

// All n single-bit flips of v. Valid for n up to 64.
inline std::vector<std::uint64_t> hypercube_neighbors(std::uint64_t v, int n)
{
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t(std::max(n, 0)));
    for (int k = 0; k < n; ++k) out.push_back(v ^ (std::uint64_t(1) << k));
    return out;
}

inline int hamming_potential(std::uint64_t v) { return std::popcount(v); }

// Undirected simple graph with adjacency lists; used for small validation
// instances where the stationary distribution can be cross-checked densely.
class ExplicitGraph {
public:
    explicit ExplicitGraph(std::uint32_t order) : adj_(order) {}

    void add_edge(std::uint32_t u, std::uint32_t v)
    {
        if (u >= order() || v >= order()) throw std::out_of_range("add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("add_edge: self-loop");
        auto& au = adj_[u];
        if (std::find(au.begin(), au.end(), v) != au.end()) return; // ignore duplicates
        au.push_back(v);
        adj_[v].push_back(u);
    }

    std::uint32_t order() const { return std::uint32_t(adj_.size()); }

    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }

    std::uint32_t degree(std::uint32_t v) const { return std::uint32_t(adj_[v].size()); }

    std::uint32_t max_degree() const
    {
        std::uint32_t d = 0;
        for (const auto& a : adj_) d = std::max<std::uint32_t>(d, std::uint32_t(a.size()));
        return d;
    }

private:
    std::vector<std::vector<std::uint32_t>> adj_;
};

} // namespace ssmc
