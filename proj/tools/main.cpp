// Command-line front end for the UMDA workbench: single runs, parameter
// sweeps, model fitting, level-based bound evaluation, and numerical
// verification batteries for the probabilistic inequalities.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umda/algorithm.hpp"
#include "umda/experiments.hpp"
#include "umda/levels.hpp"
#include "umda/pbdist.hpp"
#include "umda/rng.hpp"

namespace {

namespace fs = std::filesystem;
using namespace umda;

std::string default_out_dir() {
    if (const char* env = std::getenv("UMDA_OUT_DIR")) return env;
    return ".";
}

void print_run_record(std::ostream& os, const RunRecord& r) {
    os << "{\n  \"schema_version\": 1,\n"
       << "  \"hit_optimum\": " << (r.hit_optimum ? "true" : "false") << ",\n"
       << "  \"generations\": " << r.generations << ",\n"
       << "  \"samples_T\": " << r.samples_T << ",\n"
       << "  \"first_hit_evals\": " << r.first_hit_evals << ",\n"
       << "  \"seed\": " << r.seed << "\n}\n";
}

int cmd_run(const UmdaParams& params, const std::string& fitness,
            const std::string& trajectory_path) {
    const auto f = fitness_by_name(fitness);
    const auto result = run(params, f, !trajectory_path.empty());
    if (!trajectory_path.empty()) {
        std::ofstream os(trajectory_path);
        if (!os) {
            std::cerr << "cannot open " << trajectory_path << "\n";
            return 2;
        }
        write_run_trajectory_csv(os, result.trajectory);
    }
    print_run_record(std::cout, result.record);
    return 0;
}

int cmd_sweep(const experiments::SweepConfig& config,
              const std::string& out_dir) {
    fs::create_directories(out_dir);
    const auto rows = experiments::run_sweep(config);
    const auto summary = experiments::summarize(
        rows, 100, 0.95, derive_seed(config.master_seed, 0xb007));
    {
        std::ofstream os(fs::path(out_dir) / "runs.csv");
        experiments::write_runs_csv(os, rows);
    }
    {
        std::ofstream os(fs::path(out_dir) / "summary.csv");
        experiments::write_summary_csv(os, summary);
    }
    std::cout << "wrote " << rows.size() << " runs to " << out_dir << "\n";
    return 0;
}

int cmd_fit(const std::string& summary_path, const std::string& out_path,
            const std::string& plot_path) {
    std::ifstream is(summary_path);
    if (!is) {
        std::cerr << "cannot open " << summary_path << "\n";
        return 2;
    }
    const auto summary = experiments::read_summary_csv(is);
    const auto fits = experiments::compare_models(summary);
    std::ofstream os(out_path);
    experiments::write_fits_json(os, fits);
    experiments::write_fits_json(std::cout, fits);
    if (!plot_path.empty()) {
        std::ofstream ps(plot_path);
        experiments::write_plot_svg(ps, summary, fits);
    }
    return 0;
}

int cmd_bound(std::size_t n, std::size_t lambda, std::size_t mu, double c) {
    const double gamma0 =
        static_cast<double>(mu) / static_cast<double>(lambda);
    const double delta = c / (1.0 - c);
    std::vector<double> z;
    for (std::size_t j = 1; j <= n; ++j)
        z.push_back(levels::z_lower_bound(n, static_cast<long long>(j), c));
    const double z_star = z.back();  // z is non-increasing in j
    const double min_lambda =
        levels::g3_min_lambda(gamma0, delta, n + 1, z_star);
    const double bound = levels::expected_time_bound(
        z, delta, static_cast<double>(lambda));
    std::cout << "{\n  \"schema_version\": 1,\n"
              << "  \"gamma0\": " << gamma0 << ",\n"
              << "  \"delta\": " << delta << ",\n"
              << "  \"z_star\": " << z_star << ",\n"
              << "  \"g3_min_lambda\": " << min_lambda << ",\n"
              << "  \"g3_satisfied\": "
              << (static_cast<double>(lambda) >= min_lambda ? "true" : "false")
              << ",\n"
              << "  \"expected_time_bound\": " << bound << ",\n"
              << "  \"bound_per_n_lambda\": "
              << bound / (static_cast<double>(n) * static_cast<double>(lambda))
              << "\n}\n";
    return 0;
}

std::vector<double> random_probs(std::size_t n, Xoshiro256& rng) {
    std::vector<double> p(n);
    for (auto& v : p) v = rng.next_double();
    return p;
}

int cmd_verify_pb(std::size_t trials, std::size_t n_max, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::size_t violations = 0;
    auto report = [&](const char* battery, std::size_t i,
                      const InequalityReport& r) {
        if (!r.satisfied) {
            ++violations;
            std::cerr << battery << " violated at instance " << i
                      << ": statistic=" << r.statistic << " bound=" << r.bound
                      << "\n";
        }
    };
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t n = 1 + rng.below(n_max);
        PoissonBinomial d(random_probs(n, rng));
        report("anti-concentration", i, check_anticoncentration(d));
        const double delta = 3.0 * (1.0 - rng.next_double());  // (0, 3]
        report("feige", i, check_feige(d, delta));
    }
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t n = 2 + rng.below(n_max > 1 ? n_max - 1 : 1);
        auto p = random_probs(n - 1, rng);
        double s = 0.0;
        for (double v : p) s += v;
        p.push_back(std::ceil(s) - s);  // makes the mean an integer
        PoissonBinomial d(std::move(p));
        report("integer-mean median", i, check_integer_mean_median(d));
    }
    std::cout << (violations == 0 ? "all batteries passed"
                                  : "violations found")
              << " (" << trials << " trials, n <= " << n_max << ")\n";
    return violations == 0 ? 0 : 1;
}

int cmd_verify_levels(std::size_t n, std::size_t mu, std::size_t lambda,
                      double c, std::size_t instances, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::size_t violations = 0;
    std::cout << "{\n  \"schema_version\": 1,\n  \"records\": [\n";
    bool first = true;
    auto emit = [&](const levels::LevelCheckRecord& r) {
        if (!r.satisfied) ++violations;
        if (!first) std::cout << ",\n";
        first = false;
        std::cout << "    {\"condition\": \"" << r.condition
                  << "\", \"case\": \"" << r.case_label << "\", \"j\": " << r.j
                  << ", \"k\": " << r.k << ", \"l\": " << r.l
                  << ", \"exact_prob\": " << r.exact_prob
                  << ", \"case_bound\": " << r.case_bound
                  << ", \"z_bound\": " << r.z_bound << ", \"satisfied\": "
                  << (r.satisfied ? "true" : "false") << "}";
    };
    for (std::size_t i = 0; i < instances; ++i) {
        emit(levels::check_G1_cases(levels::generate_g1_instance(n, mu, rng),
                                    c));
        emit(levels::check_G2_arithmetic(
            levels::generate_g2_instance(n, mu, lambda, rng), c));
    }
    std::cout << "\n  ],\n  \"violations\": " << violations << "\n}\n";
    return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UMDA on OneMax workbench"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run UMDA once, print a JSON record");
    UmdaParams rp;
    std::string fitness = "onemax";
    std::string trajectory;
    run_cmd->add_option("--n", rp.n, "problem size")->required()
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--lambda", rp.lambda, "offspring population size")
        ->required()->check(CLI::PositiveNumber);
    run_cmd->add_option("--mu", rp.mu, "parent population size")->required()
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--margin", rp.margin, "margin m'")->required()
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--fitness", fitness, "onemax|leadingones|binval");
    run_cmd->add_option("--seed", rp.seed, "RNG seed");
    run_cmd->add_option("--max-generations", rp.max_generations,
                        "generation cap")->check(CLI::PositiveNumber);
    run_cmd->add_option("--trajectory", trajectory, "trajectory CSV path");
    rp.max_generations = 100000;

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Replicated parameter sweep");
    experiments::SweepConfig sc;
    std::vector<std::size_t> n_values;
    std::string lambda_rule = "sqrt", mu_rule = "log";
    std::string out_dir = default_out_dir();
    sweep_cmd->add_option("--n-values", n_values, "problem sizes")
        ->delimiter(',');
    sweep_cmd->add_option("--replicates", sc.replicates, "runs per size");
    sweep_cmd->add_option("--lambda-rule", lambda_rule,
                          "sqrt|log|const:<v>|mul:<a>:<base>");
    sweep_cmd->add_option("--mu-rule", mu_rule, "rule for mu");
    sweep_cmd->add_option("--margin", sc.margin, "margin m'");
    sweep_cmd->add_flag("--margin-mu-over-n", sc.margin_mu_over_n,
                        "use margin mu/n per size (borders 1/n, 1-1/n)");
    sweep_cmd->add_option("--fitness", sc.fitness, "fitness name");
    sweep_cmd->add_option("--seed", sc.master_seed, "master seed");
    sweep_cmd->add_option("--max-generations", sc.max_generations,
                          "generation cap");
    sweep_cmd->add_option("--jobs", sc.jobs, "worker threads");
    sweep_cmd->add_option("--out", out_dir, "output directory");
    sweep_cmd->set_config("--config", "", "key=value config file");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Fit growth models to a summary");
    std::string summary_path, fits_out = "fits.json", plot_path;
    fit_cmd->add_option("--summary", summary_path, "summary.csv path")
        ->required();
    fit_cmd->add_option("--out", fits_out, "fits.json path");
    fit_cmd->add_option("--plot", plot_path, "SVG plot path");

    // bound
    auto* bound_cmd =
        app.add_subcommand("bound", "Evaluate the expected-time bound");
    std::size_t bn = 0, blambda = 0, bmu = 0;
    double bc = 0.5;
    bound_cmd->add_option("--n", bn, "problem size")->required()
        ->check(CLI::PositiveNumber);
    bound_cmd->add_option("--lambda", blambda, "population size")->required()
        ->check(CLI::PositiveNumber);
    bound_cmd->add_option("--mu", bmu, "parent population size")->required()
        ->check(CLI::PositiveNumber);
    bound_cmd->add_option("--c", bc, "regime constant in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Inequality batteries");
    verify_cmd->require_subcommand(1);
    auto* pb_cmd = verify_cmd->add_subcommand(
        "pb", "Anti-concentration, Feige and integer-mean batteries");
    std::size_t trials = 1000, vn_max = 50;
    std::uint64_t vseed = 1;
    pb_cmd->add_option("--trials", trials, "instances per battery")
        ->check(CLI::PositiveNumber);
    pb_cmd->add_option("--n-max", vn_max, "max vector length")
        ->check(CLI::PositiveNumber);
    pb_cmd->add_option("--seed", vseed, "RNG seed");

    auto* lv_cmd =
        verify_cmd->add_subcommand("levels", "G1/G2 instance batteries");
    std::size_t ln = 100, lmu = 7, llambda = 500, linstances = 100;
    double lc = 0.5;
    std::uint64_t lseed = 1;
    lv_cmd->add_option("--n", ln, "problem size")->check(CLI::PositiveNumber);
    lv_cmd->add_option("--mu", lmu, "parent population size")
        ->check(CLI::PositiveNumber);
    lv_cmd->add_option("--lambda", llambda, "population size")
        ->check(CLI::PositiveNumber);
    lv_cmd->add_option("--c", lc, "regime constant in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    lv_cmd->add_option("--instances", linstances, "instances per condition")
        ->check(CLI::PositiveNumber);
    lv_cmd->add_option("--seed", lseed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(rp, fitness, trajectory);
        if (sweep_cmd->parsed()) {
            if (n_values.empty()) {
                std::cerr << "sweep: --n-values is required\n";
                return 2;
            }
            sc.n_values = n_values;
            sc.lambda_rule = experiments::ParamRule::parse(lambda_rule);
            sc.mu_rule = experiments::ParamRule::parse(mu_rule);
            return cmd_sweep(sc, out_dir);
        }
        if (fit_cmd->parsed()) return cmd_fit(summary_path, fits_out, plot_path);
        if (bound_cmd->parsed()) return cmd_bound(bn, blambda, bmu, bc);
        if (pb_cmd->parsed()) return cmd_verify_pb(trials, vn_max, vseed);
        if (lv_cmd->parsed())
            return cmd_verify_levels(ln, lmu, llambda, lc, linstances, lseed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
