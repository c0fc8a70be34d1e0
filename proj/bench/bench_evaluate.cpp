// Serial vs OpenMP population evaluation, and one full GA generation.

#include <benchmark/benchmark.h>

#include <random>

#include "baystow/evaluation.hpp"
#include "baystow/ga.hpp"
#include "baystow/io.hpp"

using namespace baystow;

namespace {

struct Fixture {
    Instance instance;
    std::vector<Arrangement> pop;

    Fixture(int side, std::size_t n) {
        const BayDims d{side, side, side};
        instance = generate_instance({d, d.capacity(), 1.0, 100.0, 1});
        std::mt19937_64 rng(2);
        for (std::size_t k = 0; k < n; ++k)
            pop.push_back(shuffle_ids(canonical_fill(instance), rng, instance.size()));
    }
};

void BM_EvaluateSerial(benchmark::State& state) {
    Fixture f(static_cast<int>(state.range(0)), 100);
    const FitnessKernel kernel(f.instance);
    std::vector<double> out(f.pop.size());
    for (auto _ : state) {
        evaluate_population_serial(kernel, f.pop, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(f.pop.size()));
}

void BM_EvaluateParallel(benchmark::State& state) {
    Fixture f(static_cast<int>(state.range(0)), 100);
    const FitnessKernel kernel(f.instance);
    std::vector<double> out(f.pop.size());
    for (auto _ : state) {
        evaluate_population_parallel(kernel, f.pop, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(f.pop.size()));
}

void BM_EvolveStep(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const BayDims d{side, side, side};
    const auto instance = generate_instance({d, d.capacity(), 1.0, 100.0, 1});
    GaConfig cfg;
    cfg.pop_size = 50;
    cfg.threads = static_cast<int>(state.range(1));
    std::mt19937_64 rng(3);
    const FitnessKernel kernel(instance);
    auto pop = init_population(instance, cfg, rng);
    for (auto _ : state) {
        pop = evolve_step(pop, kernel, instance, cfg, rng);
        benchmark::DoNotOptimize(pop.front().fitness);
    }
}

} // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(4)->Arg(7)->Arg(10);
BENCHMARK(BM_EvaluateParallel)->Arg(4)->Arg(7)->Arg(10);
BENCHMARK(BM_EvolveStep)->Args({10, 1})->Args({10, 4});

BENCHMARK_MAIN();
