// Serial reference vs OpenMP kernels. Argument: number of generators n,
// split as p = n - n/2, q = n/2.

#include <benchmark/benchmark.h>

#include "clifford/finite_group.hpp"
#include "clifford/kernels.hpp"

namespace {

using namespace clifford;

AlgebraSignature sig_for(const benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  return AlgebraSignature(n - n / 2, n / 2);
}

template <auto Kernel>
void BM_CayleyTable(benchmark::State& state) {
  const SalingarosLayout layout(sig_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(layout));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(layout.order() * layout.order()));
}
BENCHMARK(BM_CayleyTable<kernels::cayley_table_serial>)->Name("cayley_table/serial")->DenseRange(6, 10, 2);
BENCHMARK(BM_CayleyTable<kernels::cayley_table_parallel>)->Name("cayley_table/parallel")->DenseRange(6, 10, 2)->UseRealTime();

template <auto Kernel>
void BM_Associativity(benchmark::State& state) {
  const SalingarosLayout layout(sig_for(state));
  const auto table = kernels::cayley_table_parallel(layout);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(table, layout.order()));
  const auto n = static_cast<std::int64_t>(layout.order());
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_Associativity<kernels::associativity_violations_serial>)->Name("associativity/serial")->DenseRange(4, 6);
BENCHMARK(BM_Associativity<kernels::associativity_violations_parallel>)->Name("associativity/parallel")->DenseRange(4, 6)->UseRealTime();

template <auto Kernel>
void BM_SampledAssociativity(benchmark::State& state) {
  const SalingarosLayout layout(sig_for(state));
  const auto table = kernels::cayley_table_parallel(layout);
  constexpr std::uint64_t kSamples = 1'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(table, layout.order(), kSamples, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kSamples));
}
BENCHMARK(BM_SampledAssociativity<kernels::sampled_associativity_violations_serial>)->Name("sampled_associativity/serial")->Arg(8);
BENCHMARK(BM_SampledAssociativity<kernels::sampled_associativity_violations_parallel>)->Name("sampled_associativity/parallel")->Arg(8)->UseRealTime();

template <auto Kernel>
void BM_Homomorphism(benchmark::State& state) {
  const GammaBasis basis = brauer_weyl_basis(sig_for(state));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(basis));
}
BENCHMARK(BM_Homomorphism<kernels::homomorphism_violations_serial>)->Name("homomorphism/serial")->DenseRange(3, 5);
BENCHMARK(BM_Homomorphism<kernels::homomorphism_violations_parallel>)->Name("homomorphism/parallel")->DenseRange(3, 5)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
