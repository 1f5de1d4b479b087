#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "umda/fitness.hpp"
#include "umda/model.hpp"
#include "umda/pbdist.hpp"
#include "umda/rng.hpp"

namespace umda {

struct UmdaParams {
    std::size_t n = 0;
    std::size_t lambda = 0;
    std::size_t mu = 0;
    double margin = 0.5;
    std::size_t max_generations = 1;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on violated parameter constraints.
    void validate() const;
};

struct Population {
    std::vector<BitString> individuals;
    std::vector<long long> fitnesses;

    /// Descending by fitness; relative order among equals unspecified
    /// (tie handling at the cutoff lives in select_truncation).
    void sort_descending();
};

struct RunRecord {
    bool hit_optimum = false;
    /// Number of sampling rounds executed, counted from 1, up to and
    /// including the first round whose population contains an optimum.
    std::size_t generations = 0;
    /// lambda * generations: candidate solutions sampled until the hit.
    std::size_t samples_T = 0;
    /// 1-based index of the first optimal individual in sampling order,
    /// scanning generations in order. 0 when no hit.
    std::size_t first_hit_evals = 0;
    std::uint64_t seed = 0;
};

/// One trajectory row per generation: the model the generation was sampled
/// from plus the population's fitness summary.
struct TrajectoryRow {
    std::size_t generation;
    long long best_fitness;
    double mean_fitness;
    std::vector<double> marginals;
};

struct RunResult {
    RunRecord record;
    std::vector<TrajectoryRow> trajectory;  // empty unless requested
};

/// Parameter-regime check for the O(n*lambda) bound: a*ln(n) <= mu <=
/// sqrt(n(1-c)), lambda >= 13e*mu/(1-c), and margin == mu/n within 1e-12.
/// Failed clauses are listed in the witness.
InequalityReport check_runtime_regime(const UmdaParams& params, double a,
                                       double c);

/// The mu fittest individuals; ties at the cutoff fitness broken uniformly
/// at random without replacement. Throws if mu exceeds the population size.
std::vector<BitString> select_truncation(const Population& pop, std::size_t mu,
                                         Xoshiro256& rng);

/// Full loop: uniform initialisation, then sample/evaluate/select/update
/// until an optimum is sampled or max_generations is exhausted (the latter
/// yields hit_optimum=false, not an error). Optimum detection happens at
/// sampling time, before selection.
RunResult run(const UmdaParams& params, const FitnessFunction& f,
              bool record_trajectory = false);

/// Header `generation,best_fitness,mean_fitness,p_1..p_n`.
void write_run_trajectory_csv(std::ostream& os,
                              const std::vector<TrajectoryRow>& rows);

}  // namespace umda
