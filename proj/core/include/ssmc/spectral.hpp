#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Exact reference results for the permutation-symmetric anneal family:
// the operator restricted to the symmetric subspace is (n+1)x(n+1)
// tridiagonal (indexed by Hamming weight), which we diagonalize directly.
// Amplitudes are kept in log space end to end: the ground vector decays
// like e^{-O(n)} in the tail, and the L1 functional multiplies it by
// binomial weights up to C(n, n/2), so componentwise relative accuracy is
// the whole point.

namespace ssmc::spectral {

enum class Model : int { ramp = 0, spiked = 1 };

// piecewise coefficients (bs, cs) multiplying the weight ramp and the
// all-zeros well at anneal parameter s
struct ModelCoeffs {
    double bs = 0;
    double cs = 0;
};
ModelCoeffs model_coeffs(Model m, double s, double b_const, double c_const);

struct SymmetricBlock {
    int n = 0;
    std::vector<double> diag; // n+1 entries, indexed by weight
    std::vector<double> off;  // n entries, all negative
};

SymmetricBlock build_symmetric_block(int n, double s, double b_const, double c_const, Model m);

struct GroundData {
    double E0 = 0, E1 = 0, gap = 0;
    std::vector<double> log_alpha; // L2-normalized in log space, all signs +
    std::vector<double> alpha;     // exp(log_alpha); tail flushes to zero
};

// Two lowest eigenvalues by Sturm-sequence bisection; ground vector by a
// twisted pair of ratio recursions meeting at the largest component, which
// keeps every entry relatively accurate (a plain absolute-accuracy solve
// leaves the tail at noise level and ruins the L1 functional for n >~ 400).
GroundData ground_pair(const SymmetricBlock& block);

struct PFunctionals {
    double p1_zero = 0;          // L1-normalized amplitude mass at 0...0
    double p2_zero = 0;          // squared amplitude at 0...0
    std::vector<double> p1_full; // per-weight aggregate of the L1 law
};
PFunctionals p_functionals(const GroundData& g, int n);

struct ClosedForm0 {
    double b = 0, theta = 0;
    double E0 = 0, E1 = 0, gap = 0;
    double p1_zero = 0, p2_zero = 0;
    double log_Z = 0;
};
// Closed forms for the pure ramp (model 0): product ground state of n
// identical two-level problems.
ClosedForm0 closed_form_example0(int n, double s);

// (s, gap) samples of the spiked model over a grid in [1/2, 1]
struct GapCurve {
    std::vector<std::pair<double, double>> points;
    double min_s = 0, min_gap = 0;
};
GapCurve gap_curve(int n, double c_const, const std::vector<double>& s_grid);

// Spike-strength monotonicity at s=1: mean well occupation -p2_zero must be
// nonincreasing and E0 concave as the well deepens.
struct SpikeResponse {
    std::vector<double> c_grid, E0, p2_zero;
    bool occupation_monotone = false;
    bool energy_concave = false;
};
SpikeResponse le_chatelier_check(int n, const std::vector<double>& c_grid);

struct FitResult {
    double A = 0, B = 0;
};
// Least squares of y ~ A + B/sqrt(n); optionally pin A at 1/2 (the known
// large-n limit of the L1 mass), fitting B alone.
FitResult fit_inverse_sqrt(const std::vector<double>& ns, const std::vector<double>& ys,
                           bool pin_intercept_half);

// One oracle CSV row; emitted in fixed column order
struct OracleRow {
    int n = 0;
    double s = 0, E0 = 0, E1 = 0, gap = 0, p1_zero = 0, p2_zero = 0;
};
OracleRow oracle_row(int n, double s, double c_const, Model m);

} // namespace ssmc::spectral
