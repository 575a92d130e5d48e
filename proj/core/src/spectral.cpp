#include "ssmc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ssmc/schedule.hpp"

namespace ssmc::spectral {

ModelCoeffs model_coeffs(Model m, double s, double b_const, double c_const)
{
    if (m == Model::ramp) return {s * b_const, 0.0};
    return {ramp_b(s, b_const), ramp_c(s, c_const)};
}

SymmetricBlock build_symmetric_block(int n, double s, double b_const, double c_const, Model m)
{
    if (n < 1) throw std::invalid_argument("build_symmetric_block: n must be >= 1");
    const ModelCoeffs k = model_coeffs(m, s, b_const, c_const);
    SymmetricBlock blk;
    blk.n = n;
    blk.diag.resize(n + 1);
    blk.off.resize(n);
    // Laplacian degree term contributes +1 to every diagonal entry after the
    // 1/n scaling; its hopping part gives the -sqrt((w+1)(n-w))/n couplings.
    for (int w = 0; w <= n; ++w) blk.diag[w] = 1.0 + k.bs * double(w) / n;
    blk.diag[0] -= k.cs;
    for (int w = 0; w < n; ++w)
        blk.off[w] = -std::sqrt(double(w + 1) * double(n - w)) / n;
    return blk;
}

namespace {

// number of eigenvalues strictly below x (LDL^T pivot sign count)
int sturm_count(const SymmetricBlock& blk, double x, double pivmin)
{
    int count = 0;
    double q = blk.diag[0] - x;
    if (q < 0) ++count;
    for (int i = 1; i <= blk.n; ++i) {
        if (std::abs(q) < pivmin) q = q < 0 ? -pivmin : pivmin;
        q = (blk.diag[i] - x) - blk.off[i - 1] * blk.off[i - 1] / q;
        if (q < 0) ++count;
    }
    return count;
}

// smallest eigenvalue with at least k+1 eigenvalues <= it (k-th from below)
double bisect_eigenvalue(const SymmetricBlock& blk, int k, double lo, double hi, double pivmin)
{
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(blk, mid, pivmin) >= k + 1) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

GroundData ground_pair(const SymmetricBlock& blk)
{
    const int n = blk.n;
    const int dim = n + 1;

    double lo = std::numeric_limits<double>::infinity(), hi = -lo, scale = 0;
    for (int i = 0; i < dim; ++i) {
        const double r = (i > 0 ? std::abs(blk.off[i - 1]) : 0.0) +
                         (i < n ? std::abs(blk.off[i]) : 0.0);
        lo = std::min(lo, blk.diag[i] - r);
        hi = std::max(hi, blk.diag[i] + r);
        scale = std::max(scale, std::abs(blk.diag[i]) + r);
    }
    const double pivmin = std::numeric_limits<double>::min() * std::max(scale, 1.0) * dim;

    GroundData g;
    g.E0 = bisect_eigenvalue(blk, 0, lo, hi, pivmin);
    g.E1 = dim > 1 ? bisect_eigenvalue(blk, 1, g.E0, hi, pivmin) : g.E0;
    g.gap = g.E1 - g.E0;

    // Twisted two-sided ratio recursion for the ground vector. Left ratios
    // L[w] = v_w/v_{w-1} come from rows 0..w-1; right ratios R[w] = v_w/v_{w+1}
    // from rows n..w+1. Both recur toward the vector's peak, the stable
    // direction for a decaying solution, so tiny tail entries keep full
    // relative accuracy. The twist sits where the residual gamma_k is least.
    const double lam = g.E0;
    const double guard = pivmin;
    std::vector<double> L(dim, 0.0), R(dim, 0.0);
    if (dim > 1) {
        L[1] = -(blk.diag[0] - lam) / blk.off[0];
        for (int w = 1; w < dim - 1; ++w) {
            double d = (blk.diag[w] - lam) + blk.off[w - 1] / (L[w] == 0.0 ? guard : L[w]);
            L[w + 1] = -d / blk.off[w];
        }
        R[dim - 2] = -(blk.diag[dim - 1] - lam) / blk.off[dim - 2];
        for (int w = dim - 2; w > 0; --w) {
            double d = (blk.diag[w] - lam) + blk.off[w] / (R[w] == 0.0 ? guard : R[w]);
            R[w - 1] = -d / blk.off[w - 1];
        }
    }
    int twist = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < dim; ++k) {
        double gk = blk.diag[k] - lam;
        if (k > 0) gk += blk.off[k - 1] / (L[k] == 0.0 ? guard : L[k]);
        if (k < dim - 1) gk += blk.off[k] / (R[k] == 0.0 ? guard : R[k]);
        if (std::abs(gk) < best) { best = std::abs(gk); twist = k; }
    }

    g.log_alpha.assign(dim, -std::numeric_limits<double>::infinity());
    g.log_alpha[twist] = 0.0;
    for (int w = twist; w > 0; --w) {
        if (L[w] <= 0.0)
            throw std::runtime_error("ground_pair: nonpositive ratio at weight " +
                                     std::to_string(w) + "; ground vector not resolved");
        g.log_alpha[w - 1] = g.log_alpha[w] - std::log(L[w]);
    }
    for (int w = twist; w < dim - 1; ++w) {
        if (R[w] <= 0.0)
            throw std::runtime_error("ground_pair: nonpositive ratio at weight " +
                                     std::to_string(w) + "; ground vector not resolved");
        g.log_alpha[w + 1] = g.log_alpha[w] - std::log(R[w]);
    }

    // L2-normalize in log space
    double m = -std::numeric_limits<double>::infinity();
    for (double v : g.log_alpha) m = std::max(m, v);
    double s2 = 0;
    for (double v : g.log_alpha) s2 += std::exp(2.0 * (v - m));
    const double log_norm = m + 0.5 * std::log(s2);
    for (double& v : g.log_alpha) v -= log_norm;

    g.alpha.resize(dim);
    for (int i = 0; i < dim; ++i) g.alpha[i] = std::exp(g.log_alpha[i]);
    return g;
}

namespace {

double log_binomial(int n, int w)
{
    return std::lgamma(double(n) + 1) - std::lgamma(double(w) + 1) -
           std::lgamma(double(n - w) + 1);
}

} // namespace

PFunctionals p_functionals(const GroundData& g, int n)
{
    const int dim = n + 1;
    if (int(g.log_alpha.size()) != dim)
        throw std::invalid_argument("p_functionals: dimension mismatch");

    // per-weight L1 contribution: alpha_w * sqrt(C(n,w)), summed by log-sum-exp
    std::vector<double> terms(dim);
    double m = -std::numeric_limits<double>::infinity();
    for (int w = 0; w < dim; ++w) {
        terms[w] = g.log_alpha[w] + 0.5 * log_binomial(n, w);
        m = std::max(m, terms[w]);
    }
    double sum = 0;
    for (int w = 0; w < dim; ++w) sum += std::exp(terms[w] - m);
    const double log_sum = m + std::log(sum);

    PFunctionals p;
    p.p1_zero = std::exp(g.log_alpha[0] - log_sum);
    p.p2_zero = std::exp(2.0 * g.log_alpha[0]);
    p.p1_full.resize(dim);
    for (int w = 0; w < dim; ++w) p.p1_full[w] = std::exp(terms[w] - log_sum);
    return p;
}

ClosedForm0 closed_form_example0(int n, double s)
{
    ClosedForm0 cf;
    cf.b = b_constant(n);
    cf.theta = std::atan2(2.0, s * cf.b); // s=0 lands on the pi/2 limit
    const double half = 0.5 * s * cf.b;
    const double root = std::sqrt(1.0 + half * half);
    cf.E0 = 1.0 + half - root;
    cf.gap = 2.0 / n * root;
    cf.E1 = cf.E0 + cf.gap;
    const double lc = std::log(std::cos(0.5 * cf.theta));
    cf.p2_zero = std::exp(2.0 * n * lc);
    cf.log_Z = n * std::log(std::sin(0.5 * cf.theta) + std::cos(0.5 * cf.theta));
    cf.p1_zero = std::exp(n * lc - cf.log_Z);
    return cf;
}

GapCurve gap_curve(int n, double c_const, const std::vector<double>& s_grid)
{
    GapCurve out;
    out.min_gap = std::numeric_limits<double>::infinity();
    const double b = b_constant(n);
    for (double s : s_grid) {
        const GroundData g = ground_pair(build_symmetric_block(n, s, b, c_const, Model::spiked));
        out.points.emplace_back(s, g.gap);
        if (g.gap < out.min_gap) { out.min_gap = g.gap; out.min_s = s; }
    }
    return out;
}

SpikeResponse le_chatelier_check(int n, const std::vector<double>& c_grid)
{
    SpikeResponse r;
    r.c_grid = c_grid;
    const double b = b_constant(n);
    for (double c : c_grid) {
        const GroundData g = ground_pair(build_symmetric_block(n, 1.0, b, c, Model::spiked));
        r.E0.push_back(g.E0);
        r.p2_zero.push_back(p_functionals(g, n).p2_zero);
    }
    r.occupation_monotone = true;
    for (std::size_t i = 1; i < r.p2_zero.size(); ++i)
        if (r.p2_zero[i] < r.p2_zero[i - 1] - 1e-12) r.occupation_monotone = false;
    r.energy_concave = true;
    for (std::size_t i = 2; i < r.E0.size(); ++i)
        if (r.E0[i] - 2 * r.E0[i - 1] + r.E0[i - 2] > 1e-9) r.energy_concave = false;
    return r;
}

FitResult fit_inverse_sqrt(const std::vector<double>& ns, const std::vector<double>& ys,
                           bool pin_intercept_half)
{
    if (ns.size() != ys.size() || ns.empty())
        throw std::invalid_argument("fit_inverse_sqrt: need matching nonempty samples");
    double sx = 0, sxx = 0, sy = 0, sxy = 0;
    const double m = double(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double x = 1.0 / std::sqrt(ns[i]);
        sx += x;
        sxx += x * x;
        sy += ys[i];
        sxy += x * ys[i];
    }
    if (pin_intercept_half) {
        FitResult f;
        f.A = 0.5;
        f.B = (sxy - 0.5 * sx) / sxx;
        return f;
    }
    const double det = m * sxx - sx * sx;
    FitResult f;
    f.B = (m * sxy - sx * sy) / det;
    f.A = (sy - f.B * sx) / m;
    return f;
}

OracleRow oracle_row(int n, double s, double c_const, Model m)
{
    const GroundData g = ground_pair(build_symmetric_block(n, s, b_constant(n), c_const, m));
    const PFunctionals p = p_functionals(g, n);
    return {n, s, g.E0, g.E1, g.gap, p.p1_zero, p.p2_zero};
}

} // namespace ssmc::spectral
