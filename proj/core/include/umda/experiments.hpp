#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "umda/algorithm.hpp"

namespace umda {
namespace experiments {

/// Named parameter rule evaluated at a problem size n. Supported forms:
/// "sqrt" (ceil of sqrt(n)), "log" (ceil of natural log), "const:<v>",
/// and "mul:<a>:sqrt" / "mul:<a>:log" for scaled variants. Non-integer
/// values round up.
struct ParamRule {
    std::string spec;

    static ParamRule parse(const std::string& text);
    std::size_t evaluate(std::size_t n) const;
};

struct SweepConfig {
    std::vector<std::size_t> n_values;
    std::size_t replicates = 1;
    ParamRule lambda_rule;
    ParamRule mu_rule;
    double margin = 0.5;
    /// Use margin mu/n at each size (borders exactly 1/n and 1-1/n)
    /// instead of the constant `margin`. A size-independent margin keeps
    /// the upper border at 1-margin/mu, which caps the per-sample
    /// probability of the all-ones string at (1-margin/mu)^n and makes
    /// large OneMax instances unsolvable; the mu/n rule removes that cap.
    bool margin_mu_over_n = false;
    std::string fitness = "onemax";
    std::uint64_t master_seed = 0;
    std::size_t max_generations = 100000;
    std::size_t jobs = 1;
};

struct SweepRow {
    std::size_t n = 0;
    std::size_t replicate = 0;
    RunRecord record;
};

struct SummaryRow {
    std::size_t n = 0;
    double mean = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double success_rate = 0.0;
};

struct FitResult {
    std::string model;   // "n*log(n)", "n^1.5", "n^2"
    double coefficient = 0.0;
    double correlation = 0.0;
};

/// replicates x |n_values| runs, each from a seed derived from
/// (master_seed, n, replicate); results are in (n, replicate) order and
/// independent of the worker count.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Per-n mean of first_hit_evals over successful runs, with a bootstrap
/// percentile confidence interval and the success fraction. Failed runs
/// are excluded from the mean.
std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows,
                                  std::size_t bootstrap_samples,
                                  double level, std::uint64_t seed);

/// Percentile bootstrap: B resampled means, CI from the (1-level)/2 and
/// 1-(1-level)/2 empirical percentiles (linear interpolation between
/// order statistics). Throws std::invalid_argument on empty samples.
std::pair<double, double> bootstrap_ci(const std::vector<double>& samples,
                                       std::size_t B, double level,
                                       std::uint64_t seed);

/// Least squares for a single multiplicative coefficient:
/// c = sum(y*g) / sum(g^2); correlation is Pearson between observed and
/// fitted values. Throws std::invalid_argument on fewer than two points
/// or degenerate data.
FitResult fit_model(const std::vector<double>& n_values,
                    const std::vector<double>& means, const std::string& name);

/// Fits n*log(n), n^1.5 and n^2 and sorts by correlation, best first.
std::vector<FitResult> compare_models(const std::vector<SummaryRow>& summary);

// --- file formats ---
void write_runs_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);
std::vector<SummaryRow> read_summary_csv(std::istream& is);
void write_fits_json(std::ostream& os, const std::vector<FitResult>& fits);
/// Scatter of per-size means with CI error bars plus the fitted curves.
void write_plot_svg(std::ostream& os, const std::vector<SummaryRow>& summary,
                    const std::vector<FitResult>& fits);

}  // namespace experiments
}  // namespace umda
