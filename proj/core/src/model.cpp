#include "umda/model.hpp"

#include <ostream>
#include <stdexcept>

namespace umda {

ProbabilisticModel::ProbabilisticModel(std::vector<double> marginals,
                                       double lower, double upper)
    : marginals_(std::move(marginals)), lower_(lower), upper_(upper) {
    if (marginals_.empty())
        throw std::invalid_argument("ProbabilisticModel: n must be >= 1");
    if (!(lower_ < upper_))
        throw std::invalid_argument("ProbabilisticModel: lower >= upper border");
    for (double p : marginals_)
        if (!(p >= lower_ && p <= upper_))
            throw std::invalid_argument(
                "ProbabilisticModel: marginal outside borders");
}

ProbabilisticModel ProbabilisticModel::new_uniform(std::size_t n,
                                                   std::size_t mu,
                                                   double margin) {
    if (n < 1) throw std::invalid_argument("new_uniform: n must be >= 1");
    if (!(margin > 0.0) || !(margin < static_cast<double>(mu)))
        throw std::invalid_argument("new_uniform: need 0 < margin < mu");
    const double lower = margin / static_cast<double>(mu);
    const double upper = 1.0 - lower;
    if (!(0.5 >= lower && 0.5 <= upper))
        throw std::invalid_argument("new_uniform: borders exclude 1/2");
    return ProbabilisticModel(std::vector<double>(n, 0.5), lower, upper);
}

ProbabilisticModel ProbabilisticModel::update(
    const std::vector<BitString>& selected, double margin) {
    if (selected.empty())
        throw std::invalid_argument("update: no selected individuals");
    const std::size_t mu = selected.size();
    const std::size_t n = selected.front().size();
    for (const auto& x : selected)
        if (x.size() != n)
            throw std::invalid_argument("update: ragged bitstrings");
    if (!(margin > 0.0) || !(margin < static_cast<double>(mu)))
        throw std::invalid_argument("update: need 0 < margin < mu");

    const double mu_d = static_cast<double>(mu);
    const double lower = margin / mu_d;
    const double upper = 1.0 - lower;
    std::vector<double> marginals(n);
    for (std::size_t i = 0; i < n; ++i) {
        long long x = 0;
        for (const auto& ind : selected) x += ind[i];
        const double xd = static_cast<double>(x);
        if (xd < margin)
            marginals[i] = lower;
        else if (xd > mu_d - margin)
            marginals[i] = upper;
        else
            marginals[i] = xd / mu_d;
    }
    return ProbabilisticModel(std::move(marginals), lower, upper);
}

BitString ProbabilisticModel::sample(Xoshiro256& rng) const {
    BitString x(marginals_.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = rng.bernoulli(marginals_[i]) ? 1 : 0;
    return x;
}

std::pair<std::size_t, std::size_t> classify_positions(
    const std::vector<long long>& column_sums, std::size_t mu, double margin) {
    std::size_t k = 0, l = 0;
    const double mu_d = static_cast<double>(mu);
    for (long long x : column_sums) {
        if (x < 0 || x > static_cast<long long>(mu))
            throw std::invalid_argument(
                "classify_positions: column sum out of [0, mu]");
        const double xd = static_cast<double>(x);
        if (xd > mu_d - margin)
            ++l;
        else if (xd >= margin)
            ++k;
    }
    return {k, l};
}

void write_trajectory_csv(std::ostream& os,
                          const std::vector<std::vector<double>>& snapshots) {
    os << "# schema_version=1\n";
    for (std::size_t t = 0; t < snapshots.size(); ++t) {
        os << t;
        for (double p : snapshots[t]) os << ',' << p;
        os << '\n';
    }
}

}  // namespace umda
