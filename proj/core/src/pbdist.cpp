#include "umda/pbdist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace umda {

PoissonBinomial::PoissonBinomial(std::vector<double> probs)
    : probs_(std::move(probs)) {
    if (probs_.empty())
        throw std::invalid_argument("PoissonBinomial: empty probability vector");
    for (double p : probs_) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument(
                "PoissonBinomial: probability outside [0,1]");
    }
    // Iterative convolution, one Bernoulli factor at a time.
    pmf_.assign(probs_.size() + 1, 0.0);
    pmf_[0] = 1.0;
    std::size_t len = 1;
    for (double p : probs_) {
        const double q = 1.0 - p;
        pmf_[len] = pmf_[len - 1] * p;
        for (std::size_t y = len - 1; y > 0; --y)
            pmf_[y] = pmf_[y] * q + pmf_[y - 1] * p;
        pmf_[0] *= q;
        ++len;
    }
}

double PoissonBinomial::tail_geq(long long y) const {
    const long long n = static_cast<long long>(probs_.size());
    if (y < 0 || y > n + 1)
        throw std::invalid_argument("tail_geq: y out of [0, n+1]");
    double s = 0.0;
    // Sum from the far tail inward so small terms accumulate first.
    for (long long k = n; k >= y; --k) s += pmf_[static_cast<std::size_t>(k)];
    return std::min(s, 1.0);
}

double PoissonBinomial::tail_greater(double x) const {
    const long long n = static_cast<long long>(probs_.size());
    const double r = std::round(x);
    long long y;
    if (std::abs(x - r) < 1e-9) {
        y = static_cast<long long>(r) + 1;  // strict: integer x excluded
    } else {
        y = static_cast<long long>(std::floor(x)) + 1;
    }
    y = std::clamp(y, 0LL, n + 1);
    return tail_geq(y);
}

std::pair<double, double> PoissonBinomial::mean_variance() const {
    double mean = 0.0, var = 0.0;
    for (double p : probs_) {
        mean += p;
        var += p * (1.0 - p);
    }
    return {mean, var};
}

namespace {

// sqrt(2t) e^{-2t} I0(2t), with the Bessel series summed directly in the
// form sum_k (t^k/k!)^2 and scaled term by term to avoid overflow.
double eta_integrand(double t, double series_tol) {
    if (t <= 0.0) return 0.0;
    // sum_k exp(-2t) (t^k/k!)^2 computed with log-scaled terms.
    double sum = 0.0;
    double log_term = -2.0 * t;  // k = 0 term in log space
    double k = 0.0;
    for (;;) {
        const double term = std::exp(log_term);
        sum += term;
        k += 1.0;
        log_term += 2.0 * (std::log(t) - std::log(k));
        if (term < series_tol && k > 2.0 * t + 8.0) break;
        if (k > 1e7) break;
    }
    return std::sqrt(2.0 * t) * sum;
}

}  // namespace

double compute_eta(double series_tol, double search_tol) {
    if (series_tol <= 0.0 || search_tol <= 0.0)
        throw std::invalid_argument("compute_eta: tolerances must be positive");
    // Coarse scan; the maximum sits well inside [0, 5].
    double best_t = 0.0, best_v = 0.0;
    for (int i = 0; i <= 5000; ++i) {
        const double t = 5.0 * i / 5000.0;
        const double v = eta_integrand(t, series_tol);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    // Golden-section refinement around the grid maximum.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::max(0.0, best_t - 2e-3), b = best_t + 2e-3;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = eta_integrand(c, series_tol), fd = eta_integrand(d, series_tol);
    while (b - a > search_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = eta_integrand(c, series_tol);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = eta_integrand(d, series_tol);
        }
    }
    return std::max(best_v, std::max(fc, fd));
}

InequalityReport check_anticoncentration(const PoissonBinomial& d) {
    static const double eta = compute_eta();
    const auto [mean, var] = d.mean_variance();
    const auto& pmf = d.pmf();
    std::size_t argmax = 0;
    for (std::size_t y = 1; y < pmf.size(); ++y)
        if (pmf[y] > pmf[argmax]) argmax = y;
    InequalityReport r;
    r.statistic = std::sqrt(var) * pmf[argmax];
    r.bound = eta;
    r.satisfied = r.statistic <= r.bound + 1e-9;
    std::ostringstream w;
    w << "max point mass at y=" << argmax;
    r.witness = w.str();
    return r;
}

InequalityReport check_feige(const PoissonBinomial& d, double delta_shift) {
    if (!(delta_shift > 0.0))
        throw std::invalid_argument("check_feige: delta must be positive");
    const auto [mean, var] = d.mean_variance();
    InequalityReport r;
    r.statistic = d.tail_greater(mean - delta_shift);
    r.bound = std::min(1.0 / 13.0, delta_shift / (1.0 + delta_shift));
    r.satisfied = r.statistic >= r.bound;
    std::ostringstream w;
    w << "E[Y]=" << mean << ", delta=" << delta_shift;
    r.witness = w.str();
    return r;
}

InequalityReport check_integer_mean_median(const PoissonBinomial& d) {
    const auto [mean, var] = d.mean_variance();
    const double r_mean = std::round(mean);
    if (std::abs(mean - r_mean) > 1e-9)
        throw std::invalid_argument(
            "check_integer_mean_median: E[Y] is not an integer");
    InequalityReport r;
    r.statistic = d.tail_geq(static_cast<long long>(r_mean));
    r.bound = 0.5;
    r.satisfied = r.statistic >= r.bound;
    std::ostringstream w;
    w << "E[Y]=" << static_cast<long long>(r_mean);
    r.witness = w.str();
    return r;
}

}  // namespace umda
