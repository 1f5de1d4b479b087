#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "umda/model.hpp"
#include "umda/pbdist.hpp"
#include "umda/rng.hpp"

namespace umda {
namespace levels {

/// Parameters of the level-based bound. For the UMDA instantiation,
/// gamma0 = mu/lambda and delta = c/(1-c).
struct LevelParams {
    std::size_t m = 0;      // number of levels
    double gamma0 = 0.0;    // occupancy threshold, in (0,1)
    double gamma = 0.0;     // in (0, gamma0]
    double delta = 0.0;     // in (0,1]
    double c = 0.0;         // regime constant, in (0,1)
    std::vector<double> z;  // per-level lower bounds z_1..z_{m-1}

    double z_star() const;
};

/// Canonical fitness-based level of a OneMax value: j = value + 1, so
/// level j holds the strings with j-1 one-bits and level n+1 is optimal.
/// Throws std::invalid_argument when value is outside [0, n].
std::size_t level_of(long long fitness_value, std::size_t n);

/// Exact probability that a fresh sample from the model reaches level
/// j+1 or above, i.e. Pr(Y >= j) for the model's Poisson-Binomial Y.
double upgrade_probability(const ProbabilisticModel& model, long long j);

enum class CaseLabel { Case1, Case2, Case3 };

std::string to_string(CaseLabel label);

/// Population-configuration cases of the upgrade-probability argument:
/// Case1 iff k >= mu; Case2 iff k < mu and j >= n(1-1/mu)+1; Case3
/// otherwise. k interior positions, l at the upper border.
CaseLabel classify_case(std::size_t k, std::size_t l, long long j,
                        std::size_t mu, std::size_t n, double c);

/// Explicit per-level lower bound min{1/(14e), c/(2e)} * (n-j+1)/n,
/// the smallest constant among the three cases.
double z_lower_bound(std::size_t n, long long j, double c);

/// Minimum population size required by the bound:
/// (4/(gamma0 delta^2)) * ln(128 m / (z_star delta^2)).
double g3_min_lambda(double gamma0, double delta, std::size_t m,
                     double z_star);

/// (8/delta^2) * sum_j [lambda ln(6 delta lambda / (4 + z_j delta lambda))
/// + 1/z_j], evaluated exactly as written.
double expected_time_bound(const std::vector<double>& z, double delta,
                           double lambda);

/// A constructed population configuration in the mu/n-margin regime,
/// described by its per-position column sums over the top mu individuals.
/// For G1 instances gamma = 0 and the column sums total mu*(j-1); for G2
/// instances they total at least mu*(j-1) + gamma*lambda.
struct LevelInstance {
    std::vector<long long> column_sums;
    std::size_t n = 0;
    std::size_t mu = 0;
    std::size_t lambda = 0;  // only meaningful for G2 instances
    long long j = 0;
    double gamma = 0.0;      // 0 for G1
};

/// Marginals the model takes after updating from the instance's column
/// sums with margin mu/n: 0 -> 1/n, mu -> 1-1/n, X -> X/mu otherwise.
std::vector<double> instance_marginals(const LevelInstance& inst);

/// One verification record, serialisable as JSON.
struct LevelCheckRecord {
    std::string condition;  // "G1" or "G2"
    std::string case_label; // Case1/Case2/Case3, or "-" for G2
    long long j = 0;
    std::size_t k = 0;
    std::size_t l = 0;
    double exact_prob = 0.0;
    double case_bound = 0.0;
    double z_bound = 0.0;
    bool satisfied = false;
    std::string note;
};

/// G2 arithmetic on a constructed instance: checks the column-sum total
/// against gamma*lambda + mu*(j-1), the derived mean of the sampled ones
/// outside the upper-border block against j-l-1+gamma/gamma0, the exact
/// upgrade probability against (1+delta)*gamma with 1+delta = 1/(1-c),
/// and the middle-block product (1-1/n)^l >= 1/e for l <= n-1.
/// Throws std::invalid_argument when the hypothesis itself is violated.
LevelCheckRecord check_G2_arithmetic(const LevelInstance& inst, double c);

/// G1 case analysis on a gamma=0 instance: classifies the case, evaluates
/// that case's explicit lower bound on the upgrade probability, and checks
/// the exact probability against both the case bound and z_lower_bound.
LevelCheckRecord check_G1_cases(const LevelInstance& inst, double c);

/// Random hypothesis-satisfying instances (uniform over the three cases
/// for G1). Both respect j <= n and the column-sum feasibility rules.
LevelInstance generate_g1_instance(std::size_t n, std::size_t mu,
                                   Xoshiro256& rng);
LevelInstance generate_g2_instance(std::size_t n, std::size_t mu,
                                   std::size_t lambda, Xoshiro256& rng);

}  // namespace levels
}  // namespace umda
