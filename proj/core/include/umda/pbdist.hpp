#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace umda {

/// Outcome of checking a probabilistic inequality on a concrete instance.
struct InequalityReport {
    double statistic = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    std::optional<std::string> witness;  // where the margin is smallest
};

/// Sum of independent, non-identically distributed Bernoulli variables,
/// with an exact PMF/CDF engine (linear-space convolution in doubles).
class PoissonBinomial {
public:
    /// Throws std::invalid_argument on empty input or probabilities
    /// outside [0,1].
    explicit PoissonBinomial(std::vector<double> probs);

    std::size_t size() const { return probs_.size(); }
    const std::vector<double>& probs() const { return probs_; }

    /// Exact PMF: entry y is Pr(Y=y), length n+1.
    const std::vector<double>& pmf() const { return pmf_; }

    /// Pr(Y >= y) for 0 <= y <= n+1; 1 at y=0, 0 at y=n+1.
    double tail_geq(long long y) const;

    /// Pr(Y > x) for real x, strict over the integer support.
    double tail_greater(double x) const;

    /// (E[Y], Var[Y]) as exact sums of the marginals.
    std::pair<double, double> mean_variance() const;

private:
    std::vector<double> probs_;
    std::vector<double> pmf_;
};

/// Largest value of sqrt(2t) e^{-2t} sum_k (t^k/k!)^2 over t >= 0,
/// the universal point-mass constant (~0.4688). Series truncated when a
/// term drops below series_tol; maximum located by grid scan plus
/// golden-section refinement to search_tol.
double compute_eta(double series_tol = 1e-15, double search_tol = 1e-10);

/// sigma * max_y Pr(Y=y) <= eta, for every Poisson-Binomial.
InequalityReport check_anticoncentration(const PoissonBinomial& d);

/// Feige-type lower tail bound: Pr(Y > E[Y] - delta) >= min{1/13, delta/(1+delta)}
/// for any delta > 0. Throws std::invalid_argument for delta <= 0.
InequalityReport check_feige(const PoissonBinomial& d, double delta_shift);

/// Pr(Y >= E[Y]) >= 1/2 whenever E[Y] is an integer. Throws
/// std::invalid_argument if E[Y] is not an integer within 1e-9.
InequalityReport check_integer_mean_median(const PoissonBinomial& d);

}  // namespace umda
