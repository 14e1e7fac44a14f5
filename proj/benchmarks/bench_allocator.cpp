#include <benchmark/benchmark.h>

#include "airslot/allocator.hpp"
#include "airslot/brute_force.hpp"
#include "airslot/payments.hpp"
#include "airslot/rcof.hpp"
#include "airslot/scenario_io.hpp"

using namespace airslot;

namespace {

Instance synthetic_instance(int movements, int slots, int capacity, std::uint64_t seed) {
  SynthSpec spec;
  spec.num_movements = movements;
  spec.num_slots = slots;
  spec.capacities = {capacity};
  spec.params.g = 20000.0;
  spec.seed = seed;
  SynthScenario synth = synth_scenario(spec);

  RawInstance raw;
  raw.slots = synth.slots;
  raw.cities = synth.cities;
  raw.movements = synth.movements;
  raw.valuations = sample_valuations(synth.histograms, movements, slots, seed);
  raw.params = synth.params;
  return std::move(*validate_instance(raw).instance);
}

void BM_solve_allocation(benchmark::State& state) {
  Instance instance = synthetic_instance(static_cast<int>(state.range(0)), 24,
                                         static_cast<int>(state.range(0)) / 20 + 1, 11);
  for (auto _ : state) {
    SolveResult r = solve_allocation(instance);
    benchmark::DoNotOptimize(r.matching.objective);
  }
}
BENCHMARK(BM_solve_allocation)->Arg(100)->Arg(300)->Arg(900);

void BM_all_payments(benchmark::State& state) {
  Instance instance = synthetic_instance(static_cast<int>(state.range(0)), 24,
                                         static_cast<int>(state.range(0)) / 20 + 1, 11);
  for (auto _ : state) {
    PaymentVector pay = all_payments(instance);
    benchmark::DoNotOptimize(pay.payment.data());
  }
}
BENCHMARK(BM_all_payments)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_brute_force_small(benchmark::State& state) {
  Instance instance = synthetic_instance(6, 4, 3, 13);
  for (auto _ : state) {
    BruteForceResult r = brute_force_allocate(instance);
    benchmark::DoNotOptimize(r.scaled_objective);
  }
}
BENCHMARK(BM_brute_force_small);

void BM_compute_rcof(benchmark::State& state) {
  Instance instance = synthetic_instance(static_cast<int>(state.range(0)), 24, 45, 17);
  for (auto _ : state) {
    auto rho = compute_rcof(instance.movements, instance.cities, instance.params.delta,
                            instance.params.default_alpha);
    benchmark::DoNotOptimize(rho.data());
  }
}
BENCHMARK(BM_compute_rcof)->Arg(900);

}  // namespace

BENCHMARK_MAIN();
