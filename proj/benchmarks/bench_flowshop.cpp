#include <benchmark/benchmark.h>

#include <vector>

#include "mecsched/flowshop.hpp"
#include "mecsched/rng.hpp"
#include "mecsched/timeline.hpp"

namespace {

struct Times {
    std::vector<double> tx;
    std::vector<double> ex;
};

Times random_times(int n) {
    mecsched::Xoshiro256StarStar rng(static_cast<std::uint64_t>(n) * 2654435761u);
    Times t;
    t.tx.resize(static_cast<std::size_t>(n));
    t.ex.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        t.tx[static_cast<std::size_t>(i)] = rng.uniform_positive(1.0);
        t.ex[static_cast<std::size_t>(i)] = rng.uniform_positive(1.0);
    }
    return t;
}

void BM_johnson_order(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Times t = random_times(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mecsched::johnson_order(t.tx, t.ex));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_johnson_order)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_makespan_recursion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Times t = random_times(n);
    const std::vector<int> order = mecsched::johnson_order(t.tx, t.ex);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mecsched::makespan_of_order(t.tx, t.ex, order));
    }
}
BENCHMARK(BM_makespan_recursion)->Range(1 << 10, 1 << 18);

}  // namespace
