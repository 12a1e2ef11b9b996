#include <benchmark/benchmark.h>

#include <vector>

#include "batopt/assignment.hpp"
#include "batopt/functions.hpp"
#include "batopt/stats.hpp"
#include "batopt/swarm.hpp"

namespace {

using namespace batopt;

void BM_Evaluate(benchmark::State& state) {
    const auto id = static_cast<FunctionId>(state.range(0));
    const BenchmarkSpec& spec = spec_of(id);
    const int dim = spec.fixed_dim > 0 ? 0 : static_cast<int>(state.range(1));
    const SearchSpace space = spec.space(dim);
    Rng rng(1);
    std::vector<double> x(space.dim());
    for (std::size_t d = 0; d < x.size(); ++d) x[d] = rng.uniform(space.lower[d], space.upper[d]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(id, x, rng));
    }
}
BENCHMARK(BM_Evaluate)
    ->Args({1, 30})
    ->Args({3, 30})
    ->Args({10, 30})
    ->Args({12, 30})
    ->Args({20, 0})
    ->Args({23, 0});

void BM_EngineRun(benchmark::State& state) {
    SwarmConfig cfg;
    cfg.population_size = 30;
    cfg.max_iterations = static_cast<int>(state.range(0));
    cfg.rng_seed = 3;
    const SearchSpace space = spec_of(FunctionId::F1).space(30);
    const Objective objective = [](std::span<const double> x, Rng& rng) {
        return evaluate(FunctionId::F1, x, rng);
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_mba(objective, space, cfg));
    }
    state.SetItemsProcessed(state.iterations() * cfg.population_size *
                            (cfg.max_iterations + 1));
}
BENCHMARK(BM_EngineRun)->Arg(50)->Arg(200);

void BM_DecodeRandomKeys(benchmark::State& state) {
    Rng rng(7);
    std::vector<double> position(static_cast<std::size_t>(state.range(0)));
    for (auto& v : position) v = rng.next_unit();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_random_keys(position));
    }
}
BENCHMARK(BM_DecodeRandomKeys)->Arg(4)->Arg(8)->Arg(64);

void BM_RankSumExact(benchmark::State& state) {
    Rng rng(11);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> a(n), b(n);
    for (auto& v : a) v = rng.uniform(0.0, 1.0);
    for (auto& v : b) v = rng.uniform(0.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_sum_exact_p(a, b));
    }
}
BENCHMARK(BM_RankSumExact)->Arg(5)->Arg(8);

void BM_BruteForceAssignment(benchmark::State& state) {
    Rng rng(13);
    const CostMatrix m = random_cost_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_optimum(m));
    }
}
BENCHMARK(BM_BruteForceAssignment)->Arg(4)->Arg(8);

} // namespace

BENCHMARK_MAIN();
