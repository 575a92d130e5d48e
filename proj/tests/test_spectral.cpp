#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "ssmc/dense.hpp"
#include "ssmc/schedule.hpp"
#include "ssmc/spectral.hpp"

using namespace ssmc;
using namespace ssmc::spectral;

namespace {

std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> s;
    for (int i = 0; i < count; ++i)
        s.push_back(lo + (hi - lo) * double(i) / double(count - 1));
    return s;
}

double block_residual(const SymmetricBlock& blk, const GroundData& g)
{
    // ||H v - E0 v|| / ||H|| in linear space; the underflowed tail contributes nothing
    double norm_h = 0;
    for (int i = 0; i <= blk.n; ++i) {
        double r = std::abs(blk.diag[i]);
        if (i > 0) r += std::abs(blk.off[i - 1]);
        if (i < blk.n) r += std::abs(blk.off[i]);
        norm_h = std::max(norm_h, r);
    }
    double res = 0;
    for (int i = 0; i <= blk.n; ++i) {
        double hv = blk.diag[i] * g.alpha[i];
        if (i > 0) hv += blk.off[i - 1] * g.alpha[i - 1];
        if (i < blk.n) hv += blk.off[i] * g.alpha[i + 1];
        res += (hv - g.E0 * g.alpha[i]) * (hv - g.E0 * g.alpha[i]);
    }
    return std::sqrt(res) / norm_h;
}

} // namespace

TEST_CASE("single-bit block at s=0 is the scaled two-vertex Laplacian")
{
    const SymmetricBlock blk = build_symmetric_block(1, 0.0, b_constant(1), 0.0, Model::ramp);
    REQUIRE(blk.diag.size() == 2);
    CHECK(blk.diag[0] == doctest::Approx(1.0));
    CHECK(blk.diag[1] == doctest::Approx(1.0));
    CHECK(blk.off[0] == doctest::Approx(-1.0));
    const GroundData g = ground_pair(blk);
    CHECK(g.E0 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(g.E1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(g.alpha[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(g.alpha[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("gap at s=0 equals 2/n")
{
    for (int n : {4, 16, 64}) {
        const GroundData g = ground_pair(build_symmetric_block(n, 0.0, b_constant(n), 0.0, Model::ramp));
        CHECK(g.E0 == doctest::Approx(0.0).epsilon(1e-11));
        CHECK(g.gap == doctest::Approx(2.0 / n).epsilon(1e-11));
    }
}

TEST_CASE("ramp model matches its closed forms across n and s")
{
    for (int n : {10, 100, 1000}) {
        for (double s : {0.1, 0.5, 1.0}) {
            const ClosedForm0 cf = closed_form_example0(n, s);
            const GroundData g =
                ground_pair(build_symmetric_block(n, s, b_constant(n), 0.0, Model::ramp));
            const PFunctionals p = p_functionals(g, n);
            CHECK(g.E0 == doctest::Approx(cf.E0).epsilon(1e-10));
            CHECK(g.gap == doctest::Approx(cf.gap).epsilon(1e-10));
            CHECK(p.p2_zero == doctest::Approx(cf.p2_zero).epsilon(1e-10));
            CHECK(p.p1_zero == doctest::Approx(cf.p1_zero).epsilon(1e-10));
        }
    }
}

TEST_CASE("componentwise tail accuracy at n=2000")
{
    // the ground vector of the full ramp is a product state; every log
    // amplitude down to e^{-700} must match it in relative terms
    const int n = 2000;
    const ClosedForm0 cf = closed_form_example0(n, 1.0);
    const GroundData g = ground_pair(build_symmetric_block(n, 1.0, cf.b, 0.0, Model::ramp));
    const double lc = std::log(std::cos(0.5 * cf.theta));
    const double ls = std::log(std::sin(0.5 * cf.theta));
    for (int w = 0; w <= n; ++w) {
        const double log_binom = std::lgamma(n + 1.0) - std::lgamma(w + 1.0) -
                                 std::lgamma(double(n - w) + 1.0);
        const double expected = 0.5 * log_binom + (n - w) * lc + w * ls;
        CHECK(g.log_alpha[w] == doctest::Approx(expected).epsilon(1e-9));
    }
    const PFunctionals p = p_functionals(g, n);
    CHECK(p.p1_zero == doctest::Approx(cf.p1_zero).epsilon(1e-10));
}

TEST_CASE("ground vector is positive, normalized, and has small residual")
{
    for (int n : {10, 100, 500}) {
        for (double s : {0.0, 0.3, 1.0}) {
            const SymmetricBlock blk =
                build_symmetric_block(n, s, b_constant(n), 2.0, Model::spiked);
            const GroundData g = ground_pair(blk);
            CHECK(g.E0 < g.E1);
            double sum2 = 0;
            for (double a : g.alpha) {
                CHECK(a >= 0.0);
                sum2 += a * a;
            }
            CHECK(sum2 == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(block_residual(blk, g) < 1e-10);
        }
    }
}

TEST_CASE("product-state amplitudes at moderate n")
{
    const int n = 10;
    const double s = 0.7;
    const ClosedForm0 cf = closed_form_example0(n, s);
    const GroundData g = ground_pair(build_symmetric_block(n, s, cf.b, 0.0, Model::ramp));
    for (int w = 0; w <= n; ++w) {
        const double binom = std::exp(std::lgamma(n + 1.0) - std::lgamma(w + 1.0) -
                                      std::lgamma(double(n - w) + 1.0));
        const double expected = std::sqrt(binom) * std::pow(std::cos(0.5 * cf.theta), n - w) *
                                std::pow(std::sin(0.5 * cf.theta), w);
        CHECK(g.alpha[w] == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("p functionals normalize and degenerate correctly")
{
    const int n = 12;
    // s=0 ground state is uniform over vertices
    const GroundData g = ground_pair(build_symmetric_block(n, 0.0, b_constant(n), 0.0, Model::ramp));
    const PFunctionals p = p_functionals(g, n);
    CHECK(p.p1_zero == doctest::Approx(std::pow(2.0, -n)).epsilon(1e-9));
    CHECK(p.p2_zero == doctest::Approx(std::pow(2.0, -n)).epsilon(1e-9));
    CHECK(std::accumulate(p.p1_full.begin(), p.p1_full.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    double sum2 = 0;
    for (double a : g.alpha) sum2 += a * a;
    CHECK(sum2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("large-n limits of the closed forms")
{
    const int n = 10000;
    const ClosedForm0 cf = closed_form_example0(n, 1.0);
    CHECK(cf.p2_zero == doctest::Approx(std::exp(-0.5)).epsilon(1e-3));
    CHECK(cf.log_Z / std::sqrt(n / 2.0) == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(std::log(cf.p1_zero) + std::sqrt(n / 2.0) == doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("dense and block spectra agree (permutation-symmetric reduction)")
{
    for (int n : {4, 6, 8, 10}) {
        const double b = b_constant(n);
        for (double s : {0.25, 0.5, 0.75, 1.0}) {
            for (double c : {0.0, 2.0, 4.0}) {
                for (Model m : {Model::ramp, Model::spiked}) {
                    if (m == Model::ramp && c != 0.0) continue;
                    const auto h = dense_hamiltonian(n, s, b, c, m);
                    const DensePair dp = dense_ground_pair(h, 1 << n);
                    const GroundData g = ground_pair(build_symmetric_block(n, s, b, c, m));
                    CHECK(dp.E0 == doctest::Approx(g.E0).epsilon(1e-9));
                    CHECK(dp.E1 == doctest::Approx(g.E1).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("dense operator structure")
{
    const int n = 6;
    const auto h = dense_hamiltonian(n, 0.0, b_constant(n), 0.0, Model::ramp);
    const std::size_t dim = 1u << n;
    // rows of the pure Laplacian part sum to zero
    for (std::size_t v = 0; v < dim; ++v) {
        double row = 0;
        for (std::size_t u = 0; u < dim; ++u) row += h[v * dim + u];
        CHECK(row == doctest::Approx(0.0).epsilon(1e-12));
    }
    // ground amplitudes depend only on Hamming weight
    const auto h1 = dense_hamiltonian(n, 0.8, b_constant(n), 2.0, Model::spiked);
    const DensePair dp = dense_ground_pair(h1, int(dim));
    for (std::size_t v = 0; v < dim; ++v) {
        const std::size_t rep = (std::size_t(1) << std::popcount(v)) - 1; // same weight
        CHECK(dp.ground[v] == doctest::Approx(dp.ground[rep]).epsilon(1e-8));
    }
    CHECK_THROWS_AS(dense_hamiltonian(13, 0.5, 1.0, 0.0, Model::ramp), std::invalid_argument);
}

TEST_CASE("spiked gap curve: minimum at the splice, nondecreasing beyond it")
{
    for (int n : {8, 32, 128}) {
        const GapCurve curve = gap_curve(n, 2.0, linspace(0.5, 1.0, 26));
        CHECK(curve.min_s == doctest::Approx(0.5));
        double prev = -1;
        for (const auto& [s, gap] : curve.points) {
            CHECK(gap >= prev - 1e-9);
            prev = gap;
        }
    }
}

TEST_CASE("half-point gap of the spiked model scales as sqrt(2/n)")
{
    // leading asymptotics: gap(1/2)*sqrt(n/2) -> 1 from above
    for (int n : {128, 512, 2000}) {
        const GapCurve curve = gap_curve(n, 2.0, {0.5});
        const double scaled = curve.min_gap * std::sqrt(n / 2.0);
        CHECK(scaled == doctest::Approx(1.0).epsilon(0.05));
    }
}

TEST_CASE("deepening the spike pulls occupation in and bends E0 down")
{
    for (int n : {16, 64}) {
        std::vector<double> grid;
        for (int i = 0; i <= 20; ++i) grid.push_back(0.2 * i);
        const SpikeResponse r = le_chatelier_check(n, grid);
        CHECK(r.occupation_monotone);
        CHECK(r.energy_concave);
        for (double p2 : r.p2_zero) CHECK(p2 > 0.5);
        // c=0 splices back to the plain ramp at s=1
        CHECK(r.p2_zero[0] == doctest::Approx(closed_form_example0(n, 1.0).p2_zero).epsilon(1e-9));
    }
}

TEST_CASE("inverse-sqrt fit recovers planted coefficients")
{
    std::vector<double> ns, ys;
    for (int n = 100; n <= 2000; n += 100) {
        ns.push_back(n);
        ys.push_back(0.37 + 1.23 / std::sqrt(n));
    }
    const FitResult free_fit = fit_inverse_sqrt(ns, ys, false);
    CHECK(free_fit.A == doctest::Approx(0.37).epsilon(1e-9));
    CHECK(free_fit.B == doctest::Approx(1.23).epsilon(1e-9));

    std::vector<double> half;
    for (double n : ns) half.push_back(0.5 + 0.6 / std::sqrt(n));
    const FitResult pinned = fit_inverse_sqrt(ns, half, true);
    CHECK(pinned.A == doctest::Approx(0.5));
    CHECK(pinned.B == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("oracle rows carry the fixed column quantities")
{
    const OracleRow row = oracle_row(100, 1.0, 0.0, Model::ramp);
    const ClosedForm0 cf = closed_form_example0(100, 1.0);
    CHECK(row.n == 100);
    CHECK(row.s == 1.0);
    CHECK(row.E0 == doctest::Approx(cf.E0).epsilon(1e-10));
    CHECK(row.E1 - row.E0 == doctest::Approx(row.gap).epsilon(1e-12));
    CHECK(row.p2_zero == doctest::Approx(std::pow(1.0 - 1.0 / 400.0, 200.0)).epsilon(1e-10));
}
