#include <benchmark/benchmark.h>

#include "mecsched/altmin.hpp"
#include "mecsched/config_io.hpp"
#include "mecsched/instance_gen.hpp"
#include "mecsched/power_solver.hpp"

namespace {

mecsched::Instance instance_of(int n, std::uint64_t seed) {
    mecsched::InstanceSpec spec = mecsched::default_run_config().instance;
    spec.n_tasks = n;
    spec.seed = seed;
    return mecsched::generate_instance(spec);
}

void BM_solve_p3(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const mecsched::Instance inst = instance_of(n, 9001);
    const mecsched::P3Problem prob =
        mecsched::build_p3(mecsched::Schedule::identity(n), inst, 10.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mecsched::solve_p3(prob));
    }
}
BENCHMARK(BM_solve_p3)->Arg(5)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_alternate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const mecsched::Instance inst = instance_of(n, 9002);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mecsched::alternate(inst, 10.0));
    }
}
BENCHMARK(BM_alternate)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
