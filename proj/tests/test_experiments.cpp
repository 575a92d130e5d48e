#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ssmc/experiments.hpp"

using namespace ssmc;
using namespace ssmc::experiments;

TEST_CASE("tiny dimension: terminal occupancy of the well matches the oracle")
{
    // at n=4 a generous budget sees no reachability obstruction at all
    ObstructionConfig cfg;
    cfg.ns = {4};
    cfg.walkers = 4000;
    cfg.steps = 1500;
    cfg.trials = 3;
    cfg.seed = 5;
    const auto rows = run_obstruction(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].extinctions == 0);
    CHECK(rows[0].hits_total == cfg.trials);
    CHECK(std::abs(rows[0].mean_terminal_p_zero - rows[0].oracle_p1_s1) < 0.1);
}

TEST_CASE("median first hit of the well grows with dimension")
{
    ObstructionConfig cfg;
    cfg.ns = {16, 24, 32};
    cfg.walkers = 64;
    cfg.steps = 600;
    cfg.trials = 40;
    cfg.seed = 9;
    cfg.threads = 4;
    const auto rows = run_obstruction(cfg);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.hits_total >= cfg.trials * 9 / 10); // budget generous enough to hit
        CHECK(r.median_first_hit > 0);
        CHECK(r.median_first_hit <= std::int64_t(cfg.steps));
    }
    CHECK(rows[0].median_first_hit < rows[1].median_first_hit);
    CHECK(rows[1].median_first_hit < rows[2].median_first_hit);
}

TEST_CASE("thousand walker-steps almost never reach the well at n=64")
{
    ObstructionConfig cfg;
    cfg.ns = {64};
    cfg.walkers = 4;
    cfg.steps = 250;
    cfg.trials = 25;
    cfg.seed = 3;
    const auto rows = run_obstruction(cfg);
    CHECK(rows[0].hits_total == 0);
    CHECK(rows[0].median_first_hit == -1);
    CHECK(rows[0].mean_terminal_p_zero == 0.0);
}

TEST_CASE("obstruction rows are independent of the thread count")
{
    ObstructionConfig cfg;
    cfg.ns = {12, 20};
    cfg.walkers = 16;
    cfg.steps = 200;
    cfg.trials = 30;
    cfg.seed = 77;
    cfg.threads = 1;
    const auto serial = run_obstruction(cfg);
    cfg.threads = 4;
    const auto parallel = run_obstruction(cfg);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].hits_by_half == parallel[i].hits_by_half);
        CHECK(serial[i].hits_total == parallel[i].hits_total);
        CHECK(serial[i].extinctions == parallel[i].extinctions);
        CHECK(serial[i].median_first_hit == parallel[i].median_first_hit);
        CHECK(serial[i].mean_terminal_p_zero == parallel[i].mean_terminal_p_zero);
    }
}

TEST_CASE("obstruction config validation")
{
    ObstructionConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_obstruction(cfg), std::invalid_argument);
    cfg.trials = 1;
    cfg.ns = {65};
    CHECK_THROWS_AS(run_obstruction(cfg), std::invalid_argument);
    cfg.ns = {0};
    CHECK_THROWS_AS(run_obstruction(cfg), std::invalid_argument);
}

TEST_CASE("bench verifies small instances against brute force")
{
    BenchConfig cfg;
    cfg.k = 2;
    cfg.ns = {12, 16, 20};
    cfg.instances = 20;
    cfg.seed = 4;
    cfg.threads = 4;
    const auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.verified);
        CHECK(r.success_frac >= 0.8);
        CHECK(r.median_ms > 0);
    }
    CHECK(rows[0].steps < rows[1].steps);
    CHECK(rows[1].steps < rows[2].steps);
}

TEST_CASE("bench reruns reproduce the success column exactly")
{
    BenchConfig cfg;
    cfg.k = 3;
    cfg.ns = {10, 14};
    cfg.instances = 10;
    cfg.seed = 21;
    cfg.threads = 4;
    const auto first = run_bench(cfg);
    const auto second = run_bench(cfg);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].steps == second[i].steps);
        CHECK(first[i].success_frac == second[i].success_frac); // median_ms may differ
    }
}

TEST_CASE("bench wall time grows with the step budget")
{
    // programmed-exponential budget: steps(90)/steps(30) = e^{0.022*60} ~ 3.7x
    BenchConfig cfg;
    cfg.k = 2;
    cfg.ns = {30, 90};
    cfg.instances = 7;
    cfg.walkers = 32;
    cfg.seed = 6;
    cfg.threads = 4;
    const auto rows = run_bench(cfg);
    CHECK(!rows[0].verified); // n > 24: no brute-force column
    CHECK(rows[0].success_frac == -1.0);
    CHECK(double(rows[1].steps) / double(rows[0].steps) == doctest::Approx(std::exp(0.022 * 60)).epsilon(0.01));
    CHECK(rows[1].median_ms > 1.5 * rows[0].median_ms); // lenient: true ratio ~4x
}

TEST_CASE("bench needs explicit runtime coefficients outside k=2,3")
{
    BenchConfig cfg;
    cfg.k = 4;
    cfg.ns = {10};
    cfg.instances = 1;
    cfg.ratio = 5.0;
    CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);
    cfg.have_coeffs = true;
    cfg.t_alpha = 0.03;
    cfg.t_beta = 5.0;
    const auto rows = run_bench(cfg);
    CHECK(rows[0].steps == std::uint64_t(std::llround(std::exp(0.03 * 10 + 5.0))));
}

TEST_CASE("default clause ratios exist only for the calibrated widths")
{
    CHECK(default_clause_ratio(2) == doctest::Approx(3.0));
    CHECK(default_clause_ratio(3) == doctest::Approx(4.26));
    CHECK_THROWS_AS(default_clause_ratio(4), std::invalid_argument);
    CHECK_THROWS_AS(run_bench(BenchConfig{.k = 4, .ns = {8}, .instances = 1}), std::invalid_argument);
}
