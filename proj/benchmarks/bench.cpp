#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "umda/algorithm.hpp"
#include "umda/levels.hpp"
#include "umda/pbdist.hpp"

namespace {

void BM_PoissonBinomialPmf(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    umda::Xoshiro256 rng(1);
    std::vector<double> p(n);
    for (auto& v : p) v = rng.next_double();
    for (auto _ : state) {
        umda::PoissonBinomial d(p);
        benchmark::DoNotOptimize(d.pmf().data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PoissonBinomialPmf)->Range(64, 4096)->Complexity();

void BM_ModelSample(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    umda::ProbabilisticModel m(std::vector<double>(n, 0.5), 0.1, 0.9);
    umda::Xoshiro256 rng(2);
    for (auto _ : state) {
        auto x = m.sample(rng);
        benchmark::DoNotOptimize(x.data());
    }
}
BENCHMARK(BM_ModelSample)->Range(64, 4096);

void BM_FullRun(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto lambda =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const auto mu =
        static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n))));
    const auto f = umda::fitness_by_name("onemax");
    std::uint64_t seed = 0;
    for (auto _ : state) {
        umda::UmdaParams params{n, lambda, mu, 0.5, 100000, ++seed};
        benchmark::DoNotOptimize(umda::run(params, f).record.samples_T);
    }
}
BENCHMARK(BM_FullRun)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_UpgradeProbability(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> marginals(n, 0.5);
    umda::ProbabilisticModel m(marginals, 1.0 / static_cast<double>(n),
                               1.0 - 1.0 / static_cast<double>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            umda::levels::upgrade_probability(m, static_cast<long long>(n / 2)));
    }
}
BENCHMARK(BM_UpgradeProbability)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
