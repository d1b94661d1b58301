#include "rsdm/evolution.hpp"
#include "rsdm/objectives.hpp"
#include "rsdm/variant.hpp"

#include <benchmark/benchmark.h>

namespace {

// One full run (to convergence or 50 generations) under the default protocol.
void BM_Run(benchmark::State& state)
{
    rsdm::RunConfig cfg;
    cfg.objective = rsdm::registry()[static_cast<std::size_t>(state.range(0))];
    cfg.variant = rsdm::all_variants()[static_cast<std::size_t>(state.range(1))];
    std::uint64_t seed = 1;
    std::size_t evaluations = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        const auto curve = rsdm::run(cfg);
        evaluations += curve.evaluations_used;
        benchmark::DoNotOptimize(curve.best_fitness.back());
    }
    state.SetLabel(cfg.objective.name + " " + rsdm::variant_name(cfg.variant));
    state.counters["evals/s"] = benchmark::Counter(static_cast<double>(evaluations), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Run)->ArgsProduct({{0, 1, 2}, {0, 1, 2, 3}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
