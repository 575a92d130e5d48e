// ssmc: substochastic Monte Carlo MAX-SAT solver and spectral reference
// oracle. Subcommands: solve (DIMACS in, o/v lines + JSON out), oracle
// (spectral CSV over an s-grid), obstruct (all-zeros first-hit experiment),
// bench (random MAX-k-SAT timing/success sweep).
//
// Exit codes: 0 success, 10 extinction, 20 parse/input error, 30 config error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssmc/csv.hpp"
#include "ssmc/experiments.hpp"
#include "ssmc/maxsat.hpp"
#include "ssmc/spectral.hpp"

namespace {

constexpr const char* kToolVersion = "ssmc 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitExtinct = 10;
constexpr int kExitParse = 20;
constexpr int kExitConfig = 30;

struct SGrid {
    double lo = 0, hi = 1;
    int count = 101;
};

SGrid parse_s_grid(const std::string& text)
{
    SGrid g;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.count) || c1 != ':' || c2 != ':' || !in.eof())
        throw CLI::ValidationError("--s-grid", "expected lo:hi:count, got '" + text + "'");
    if (g.count < 1 || g.lo < 0 || g.hi > 1 || g.lo > g.hi)
        throw CLI::ValidationError("--s-grid", "need 0 <= lo <= hi <= 1 and count >= 1");
    return g;
}

std::vector<double> expand_grid(const SGrid& g)
{
    std::vector<double> s;
    if (g.count == 1) { s.push_back(g.lo); return s; }
    for (int i = 0; i < g.count; ++i)
        s.push_back(g.lo + (g.hi - g.lo) * double(i) / double(g.count - 1));
    return s;
}

// stdout unless --output was given
struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputTarget(const std::string& path)
    {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        stream = &file;
    }
};

std::string join_ints(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

int cmd_solve(const std::string& path, ssmc::SolveConfig cfg, const std::string& output)
{
    const ssmc::CnfFormula f = ssmc::parse_dimacs_file(path);

    const auto t0 = std::chrono::steady_clock::now();
    const ssmc::SolveOutcome out = ssmc::solve_maxsat(f, cfg);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::cout << "c " << kToolVersion << "\nc instance " << path << " vars " << f.num_vars
              << " clauses " << f.clauses.size() << '\n';
    for (const auto& [step, value] : out.incumbents)
        std::cout << "o " << value << '\n';
    std::cout << "v";
    for (std::int32_t v = 1; v <= f.num_vars; ++v)
        std::cout << ' ' << (ssmc::assignment_bit(out.best, v) ? v : -v);
    std::cout << '\n';

    nlohmann::ordered_json j;
    j["tool"] = kToolVersion;
    j["subcommand"] = "solve";
    j["input"] = {{"file", path}, {"vars", f.num_vars}, {"clauses", f.clauses.size()}};
    j["config"] = {{"walkers", cfg.walkers}, {"target_size", cfg.target_size},
                   {"steps", out.steps},     {"seed", cfg.seed},
                   {"gain", cfg.gain},       {"safety", cfg.safety},
                   {"dt_max", cfg.dt_max},   {"threads", cfg.threads}};
    nlohmann::ordered_json inc = nlohmann::ordered_json::array();
    for (const auto& [step, value] : out.incumbents) inc.push_back({step, value});
    j["result"] = {{"best_unsat", out.best_unsat},
                   {"satisfied", f.clauses.size() - std::size_t(out.best_unsat)},
                   {"best_step", out.best_step},
                   {"extinct", out.extinct},
                   {"extinction_step", out.extinction_step},
                   {"incumbents", inc}};
    j["timing"] = {{"wall_ms", wall_ms}};

    if (!output.empty()) {
        std::ofstream jf(output);
        if (!jf) throw std::runtime_error("cannot open output file '" + output + "'");
        jf << j.dump(2) << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
    return out.extinct ? kExitExtinct : kExitOk;
}

int cmd_oracle(int example, const std::vector<int>& ns, double c_const, const SGrid& grid,
               const std::string& output, std::uint64_t seed)
{
    using namespace ssmc::spectral;
    const Model model = example == 0 ? Model::ramp : Model::spiked;
    OutputTarget target(output);
    ssmc::CsvWriter csv(*target.stream);
    csv.metadata({{"tool", kToolVersion},
                  {"subcommand", "oracle"},
                  {"seed", std::to_string(seed)},
                  {"example", std::to_string(example)},
                  {"n", join_ints(ns)},
                  {"c", ssmc::fmt_double(c_const)},
                  {"s_grid", ssmc::fmt_double(grid.lo) + ":" + ssmc::fmt_double(grid.hi) + ":" +
                                 std::to_string(grid.count)}});
    csv.header({"n", "s", "E0", "E1", "gap", "p1_zero", "p2_zero"});
    for (int n : ns) {
        for (double s : expand_grid(grid)) {
            const OracleRow row = oracle_row(n, s, c_const, model);
            csv.line({std::to_string(row.n), ssmc::fmt_double(row.s), ssmc::fmt_double(row.E0),
                      ssmc::fmt_double(row.E1), ssmc::fmt_double(row.gap),
                      ssmc::fmt_double(row.p1_zero), ssmc::fmt_double(row.p2_zero)});
        }
    }
    return kExitOk;
}

int cmd_obstruct(const ssmc::experiments::ObstructionConfig& cfg, const std::string& output)
{
    const auto rows = ssmc::experiments::run_obstruction(cfg);
    OutputTarget target(output);
    ssmc::CsvWriter csv(*target.stream);
    csv.metadata({{"tool", kToolVersion},
                  {"subcommand", "obstruct"},
                  {"seed", std::to_string(cfg.seed)},
                  {"n", join_ints(cfg.ns)},
                  {"walkers", std::to_string(cfg.walkers)},
                  {"steps", std::to_string(cfg.steps)},
                  {"trials", std::to_string(cfg.trials)},
                  {"c", ssmc::fmt_double(cfg.c_const)},
                  {"gain", ssmc::fmt_double(cfg.gain)}});
    csv.header({"n", "walkers", "steps", "trials", "hits_by_half", "hit_frac_half", "hits_total",
                "median_first_hit", "extinctions", "mean_terminal_p_zero", "oracle_p1_s1",
                "oracle_p2_s1"});
    for (const auto& r : rows)
        csv.line({std::to_string(r.n), std::to_string(r.walkers), std::to_string(r.steps),
                  std::to_string(r.trials), std::to_string(r.hits_by_half),
                  ssmc::fmt_double(r.hit_frac_half), std::to_string(r.hits_total),
                  std::to_string(r.median_first_hit), std::to_string(r.extinctions),
                  ssmc::fmt_double(r.mean_terminal_p_zero), ssmc::fmt_double(r.oracle_p1_s1),
                  ssmc::fmt_double(r.oracle_p2_s1)});
    return kExitOk;
}

int cmd_bench(const ssmc::experiments::BenchConfig& cfg, const std::string& output)
{
    const auto rows = ssmc::experiments::run_bench(cfg);
    OutputTarget target(output);
    ssmc::CsvWriter csv(*target.stream);
    csv.metadata({{"tool", kToolVersion},
                  {"subcommand", "bench"},
                  {"seed", std::to_string(cfg.seed)},
                  {"k", std::to_string(cfg.k)},
                  {"n", join_ints(cfg.ns)},
                  {"instances", std::to_string(cfg.instances)},
                  {"ratio", ssmc::fmt_double(cfg.ratio > 0
                                                 ? cfg.ratio
                                                 : ssmc::experiments::default_clause_ratio(cfg.k))},
                  {"walkers", std::to_string(cfg.walkers)}});
    csv.header({"n", "k", "instances", "steps", "median_ms", "success_frac", "verified"});
    for (const auto& r : rows)
        csv.line({std::to_string(r.n), std::to_string(r.k), std::to_string(r.instances),
                  std::to_string(r.steps), ssmc::fmt_double(r.median_ms),
                  ssmc::fmt_double(r.success_frac), std::to_string(int(r.verified))});
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"substochastic Monte Carlo solver and spectral oracle"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // solve
    std::string solve_file, solve_output;
    ssmc::SolveConfig solve_cfg;
    auto* solve = app.add_subcommand("solve", "run the MAX-SAT solver on a DIMACS CNF file");
    solve->add_option("file", solve_file, "DIMACS CNF input")->required();
    solve->add_option("--walkers", solve_cfg.walkers, "initial walker count")
        ->capture_default_str();
    solve->add_option("--target-size", solve_cfg.target_size,
                      "population feedback target (0 = walkers)")
        ->capture_default_str();
    solve->add_option("--steps", solve_cfg.steps,
                      "anneal steps T (0 = calibrated from n and clause width)")
        ->capture_default_str();
    solve->add_option("--seed", solve_cfg.seed, "RNG seed")->capture_default_str();
    solve->add_option("--gain", solve_cfg.gain, "population feedback gain")->capture_default_str();
    solve->add_option("--safety", solve_cfg.safety, "timestep safety factor in (0,1]")
        ->check(CLI::Range(1e-6, 1.0))
        ->capture_default_str();
    solve->add_option("--dt-max", solve_cfg.dt_max, "timestep upper bound")
        ->check(CLI::Range(1e-9, 1e9))
        ->capture_default_str();
    solve->add_option("--threads", solve_cfg.threads, "worker threads")->capture_default_str();
    solve->add_option("--output", solve_output, "write the JSON summary here instead of stdout");

    // oracle
    int oracle_example = 0;
    std::vector<int> oracle_ns;
    double oracle_c = 2.0;
    std::string oracle_grid_text = "0:1:101", oracle_output;
    std::uint64_t oracle_seed = 1;
    auto* oracle = app.add_subcommand("oracle", "exact spectral reference values as CSV");
    oracle->add_option("--example", oracle_example, "0 = plain ramp, 1 = spiked ramp")
        ->required()
        ->check(CLI::Range(0, 1));
    oracle->add_option("--n", oracle_ns, "dimensions (comma separated)")
        ->required()
        ->delimiter(',');
    oracle->add_option("--c", oracle_c, "spike strength (example 1)")->capture_default_str();
    oracle->add_option("--s-grid", oracle_grid_text, "anneal grid lo:hi:count")
        ->capture_default_str();
    oracle->add_option("--seed", oracle_seed, "recorded in metadata (oracle is deterministic)")
        ->capture_default_str();
    oracle->add_option("--output", oracle_output, "CSV path (stdout if omitted)");

    // obstruct
    ssmc::experiments::ObstructionConfig obs_cfg;
    std::string obs_output;
    auto* obstruct =
        app.add_subcommand("obstruct", "first-hit statistics of the all-zeros vertex");
    obstruct->add_option("--n", obs_cfg.ns, "dimensions (comma separated, each <= 64)")
        ->delimiter(',')
        ->capture_default_str();
    obstruct->add_option("--walkers", obs_cfg.walkers, "walkers per trial")->capture_default_str();
    obstruct->add_option("--steps", obs_cfg.steps, "anneal steps per trial")
        ->capture_default_str();
    obstruct->add_option("--trials", obs_cfg.trials, "independent trials per n")
        ->capture_default_str();
    obstruct->add_option("--c", obs_cfg.c_const, "spike strength")->capture_default_str();
    obstruct->add_option("--gain", obs_cfg.gain, "population feedback gain")
        ->capture_default_str();
    obstruct->add_option("--seed", obs_cfg.seed, "RNG seed")->capture_default_str();
    obstruct->add_option("--threads", obs_cfg.threads, "parallel trials")->capture_default_str();
    obstruct->add_option("--output", obs_output, "CSV path (stdout if omitted)");

    // bench
    ssmc::experiments::BenchConfig bench_cfg;
    std::string bench_output;
    auto* bench = app.add_subcommand("bench", "random MAX-k-SAT runtime/success sweep");
    bench->add_option("--k", bench_cfg.k, "clause width")->required()->check(CLI::Range(2, 4));
    bench->add_option("--n", bench_cfg.ns, "variable counts (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--instances", bench_cfg.instances, "instances per n")
        ->capture_default_str();
    bench->add_option("--ratio", bench_cfg.ratio,
                      "clauses per variable (default 3.0 for k=2, 4.26 for k=3)");
    double t_alpha = 0, t_beta = 0;
    auto* alpha_opt = bench->add_option("--t-alpha", t_alpha, "runtime exponent: T = e^(alpha n + beta)");
    auto* beta_opt = bench->add_option("--t-beta", t_beta, "runtime offset");
    bench->add_option("--walkers", bench_cfg.walkers, "walkers per run")->capture_default_str();
    bench->add_option("--seed", bench_cfg.seed, "RNG seed")->capture_default_str();
    bench->add_option("--threads", bench_cfg.threads, "parallel instances")
        ->capture_default_str();
    bench->add_option("--output", bench_output, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help text or the error
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*solve) return cmd_solve(solve_file, solve_cfg, solve_output);
        if (*oracle) {
            const SGrid grid = parse_s_grid(oracle_grid_text);
            for (int n : oracle_ns)
                if (n < 1) throw CLI::ValidationError("--n", "dimensions must be >= 1");
            return cmd_oracle(oracle_example, oracle_ns, oracle_c, grid, oracle_output,
                              oracle_seed);
        }
        if (*obstruct) return cmd_obstruct(obs_cfg, obs_output);
        if (*bench) {
            bench_cfg.have_coeffs = alpha_opt->count() > 0 || beta_opt->count() > 0;
            if (bench_cfg.have_coeffs && (alpha_opt->count() == 0 || beta_opt->count() == 0))
                throw CLI::ValidationError("--t-alpha/--t-beta", "both must be given together");
            bench_cfg.t_alpha = t_alpha;
            bench_cfg.t_beta = t_beta;
            if (bench_cfg.k == 4 && !bench_cfg.have_coeffs)
                throw CLI::ValidationError(
                    "--k", "k=4 has no calibrated runtime; supply --t-alpha and --t-beta");
            if (bench_cfg.k == 4 && bench_cfg.ratio <= 0)
                throw CLI::ValidationError("--k", "k=4 has no default ratio; supply --ratio");
            return cmd_bench(bench_cfg, bench_output);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ssmc::DimacsParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitConfig;
}
