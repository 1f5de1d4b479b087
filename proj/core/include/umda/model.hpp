#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "umda/rng.hpp"

namespace umda {

using BitString = std::vector<std::uint8_t>;

/// Product-distribution model over {0,1}^n: one independent marginal per
/// position, clamped to [margin/mu, 1 - margin/mu] so no bit can be fixed
/// forever.
class ProbabilisticModel {
public:
    /// All marginals 1/2; borders margin/mu and 1-margin/mu.
    /// Requires 0 < margin < mu; throws std::invalid_argument otherwise.
    static ProbabilisticModel new_uniform(std::size_t n, std::size_t mu,
                                          double margin);

    /// Frequency update from mu selected strings of equal length: per
    /// position, X_i/mu clamped to the borders. Throws on ragged or empty
    /// input.
    static ProbabilisticModel update(const std::vector<BitString>& selected,
                                     double margin);

    std::size_t size() const { return marginals_.size(); }
    const std::vector<double>& marginals() const { return marginals_; }
    double lower_border() const { return lower_; }
    double upper_border() const { return upper_; }

    /// One independent Bernoulli draw per position.
    BitString sample(Xoshiro256& rng) const;

    ProbabilisticModel(std::vector<double> marginals, double lower,
                       double upper);

private:
    std::vector<double> marginals_;
    double lower_;
    double upper_;
};

/// Column sums partitioned by where the post-update marginal lands:
/// k = interior positions (margin <= X_i <= mu-margin), l = upper-border
/// positions (X_i > mu-margin); the rest sit at the lower border.
std::pair<std::size_t, std::size_t> classify_positions(
    const std::vector<long long>& column_sums, std::size_t mu, double margin);

/// One CSV row per snapshot: t, p_t(1..n).
void write_trajectory_csv(std::ostream& os,
                          const std::vector<std::vector<double>>& snapshots);

}  // namespace umda
