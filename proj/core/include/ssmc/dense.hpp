#pragma once

#include <vector>

#include "ssmc/graph.hpp"
#include "ssmc/spectral.hpp"

// Small dense diagonalization used only to validate the symmetric-block
// reduction and the engine's stationary distribution.

namespace ssmc::spectral {

// Full 2^n x 2^n operator of the anneal family in the computational basis,
// row-major. Refused above n = 12.
std::vector<double> dense_hamiltonian(int n, double s, double b_const, double c_const, Model m);

struct DensePair {
    double E0 = 0, E1 = 0;
    std::vector<double> ground; // L2-normalized, nonnegative
};

DensePair dense_ground_pair(const std::vector<double>& h, int dim);

// a*(D - A) + b*diag(w) on an explicit graph
DensePair dense_graph_ground(const ExplicitGraph& g, const std::vector<double>& w, double a,
                             double b);

} // namespace ssmc::spectral
