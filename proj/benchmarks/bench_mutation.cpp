#include "rsdm/mutation.hpp"
#include "rsdm/random_stream.hpp"
#include "rsdm/variant.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Spawn(benchmark::State& state)
{
    const auto cfg = rsdm::all_variants()[static_cast<std::size_t>(state.range(0))];
    const auto n = static_cast<std::size_t>(state.range(1));
    rsdm::ParameterVector x = rsdm::ParameterVector::zeros(n);
    rsdm::ParameterVector k = rsdm::ParameterVector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = 1.0 + static_cast<double>(i);
        k[i] = 0.01;
    }
    const auto parent = rsdm::new_individual(x, 0.5, k);
    rsdm::RandomStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rsdm::spawn(parent, cfg, rng));
    }
    state.SetLabel(rsdm::variant_name(cfg));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Spawn)->ArgsProduct({{0, 1, 2, 3}, {2, 30}});

void BM_StandardNormal(benchmark::State& state)
{
    rsdm::RandomStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rng.standard_normal());
    }
}
BENCHMARK(BM_StandardNormal);

} // namespace
