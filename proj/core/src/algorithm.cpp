#include "umda/algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace umda {

void UmdaParams::validate() const {
    if (n < 1) throw std::invalid_argument("params: n must be >= 1");
    if (mu < 1 || mu > lambda)
        throw std::invalid_argument("params: need 1 <= mu <= lambda");
    if (!(margin > 0.0) || !(margin < static_cast<double>(mu)))
        throw std::invalid_argument("params: need 0 < margin < mu");
    if (max_generations < 1)
        throw std::invalid_argument("params: max_generations must be >= 1");
}

void Population::sort_descending() {
    if (individuals.size() != fitnesses.size())
        throw std::invalid_argument("population: length mismatch");
    std::vector<std::size_t> order(individuals.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return fitnesses[a] > fitnesses[b];
    });
    std::vector<BitString> inds;
    std::vector<long long> fits;
    inds.reserve(order.size());
    fits.reserve(order.size());
    for (std::size_t i : order) {
        inds.push_back(std::move(individuals[i]));
        fits.push_back(fitnesses[i]);
    }
    individuals = std::move(inds);
    fitnesses = std::move(fits);
}

InequalityReport check_runtime_regime(const UmdaParams& params, double a,
                                       double c) {
    if (!(c > 0.0 && c < 1.0))
        throw std::invalid_argument("regime check: need 0 < c < 1");
    if (!(a > 0.0)) throw std::invalid_argument("regime check: need a > 0");

    const double n = static_cast<double>(params.n);
    const double mu = static_cast<double>(params.mu);
    const double lambda = static_cast<double>(params.lambda);
    const double e = std::exp(1.0);

    std::ostringstream failed;
    auto note = [&](const char* clause) {
        if (failed.tellp() > 0) failed << "; ";
        failed << clause;
    };
    if (!(a * std::log(n) <= mu)) note("mu < a*ln(n)");
    if (!(mu <= std::sqrt(n * (1.0 - c)))) note("mu > sqrt(n*(1-c))");
    if (!(lambda >= 13.0 * e * mu / (1.0 - c))) note("lambda < 13e*mu/(1-c)");
    if (std::abs(params.margin - mu / n) > 1e-12) note("margin != mu/n");

    InequalityReport r;
    r.satisfied = failed.tellp() == 0;
    r.statistic = r.satisfied ? 1.0 : 0.0;
    r.bound = 1.0;
    if (!r.satisfied) r.witness = failed.str();
    return r;
}

std::vector<BitString> select_truncation(const Population& pop, std::size_t mu,
                                         Xoshiro256& rng) {
    const std::size_t lambda = pop.individuals.size();
    if (mu > lambda)
        throw std::invalid_argument("select_truncation: mu > lambda");
    Population sorted = pop;
    sorted.sort_descending();

    const long long cutoff = sorted.fitnesses[mu - 1];
    std::vector<BitString> out;
    out.reserve(mu);
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < lambda; ++i) {
        if (sorted.fitnesses[i] > cutoff) {
            out.push_back(sorted.individuals[i]);
        } else if (sorted.fitnesses[i] == cutoff) {
            tied.push_back(i);
        }
    }
    // Fill the remaining slots uniformly at random from the tied block.
    std::size_t need = mu - out.size();
    for (std::size_t i = 0; i < need; ++i) {
        const std::size_t j = i + rng.below(tied.size() - i);
        std::swap(tied[i], tied[j]);
        out.push_back(sorted.individuals[tied[i]]);
    }
    return out;
}

RunResult run(const UmdaParams& params, const FitnessFunction& f,
              bool record_trajectory) {
    params.validate();
    Xoshiro256 rng(params.seed);
    ProbabilisticModel model =
        ProbabilisticModel::new_uniform(params.n, params.mu, params.margin);
    const long long opt = f.optimum(params.n);

    RunResult result;
    result.record.seed = params.seed;

    for (std::size_t gen = 1; gen <= params.max_generations; ++gen) {
        Population pop;
        pop.individuals.reserve(params.lambda);
        pop.fitnesses.reserve(params.lambda);
        std::size_t hit_index = 0;  // 1-based within the generation
        for (std::size_t k = 0; k < params.lambda; ++k) {
            pop.individuals.push_back(model.sample(rng));
            pop.fitnesses.push_back(f.evaluator(pop.individuals.back()));
            if (hit_index == 0 && pop.fitnesses.back() == opt)
                hit_index = k + 1;
        }
        if (record_trajectory) {
            const long long best =
                *std::max_element(pop.fitnesses.begin(), pop.fitnesses.end());
            const double mean =
                static_cast<double>(std::accumulate(pop.fitnesses.begin(),
                                                    pop.fitnesses.end(), 0LL)) /
                static_cast<double>(params.lambda);
            result.trajectory.push_back(
                {gen, best, mean, model.marginals()});
        }
        if (hit_index > 0) {
            result.record.hit_optimum = true;
            result.record.generations = gen;
            result.record.samples_T = params.lambda * gen;
            result.record.first_hit_evals =
                params.lambda * (gen - 1) + hit_index;
            return result;
        }
        auto selected = select_truncation(pop, params.mu, rng);
        model = ProbabilisticModel::update(selected, params.margin);
    }
    result.record.hit_optimum = false;
    result.record.generations = params.max_generations;
    result.record.samples_T = params.lambda * params.max_generations;
    result.record.first_hit_evals = 0;
    return result;
}

void write_run_trajectory_csv(std::ostream& os,
                              const std::vector<TrajectoryRow>& rows) {
    os << "# schema_version=1\n";
    os << "generation,best_fitness,mean_fitness";
    if (!rows.empty())
        for (std::size_t i = 1; i <= rows.front().marginals.size(); ++i)
            os << ",p_" << i;
    os << '\n';
    for (const auto& row : rows) {
        os << row.generation << ',' << row.best_fitness << ','
           << row.mean_fitness;
        for (double p : row.marginals) os << ',' << p;
        os << '\n';
    }
}

}  // namespace umda
