#include "braidwalk/cayley.hpp"
#include "braidwalk/ldp.hpp"
#include "braidwalk/limits.hpp"
#include "braidwalk/walk.hpp"

#include <benchmark/benchmark.h>

using namespace braidwalk;

static void BM_BuildCayleyA(benchmark::State& state) {
  const auto spec = GroupSpec::coxeter_a(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_cayley(spec).size());
}
BENCHMARK(BM_BuildCayleyA)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_BuildCayleyB(benchmark::State& state) {
  const auto spec = GroupSpec::coxeter_b(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_cayley(spec).size());
}
BENCHMARK(BM_BuildCayleyB)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_BuildCyclicProduct(benchmark::State& state) {
  const auto spec = GroupSpec::cyclic_product({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(build_cayley(spec).size());
}
BENCHMARK(BM_BuildCyclicProduct)->Unit(benchmark::kMillisecond);

static void BM_Simulate(benchmark::State& state) {
  const CayleyGraph graph = build_cayley(GroupSpec::coxeter_a(5));
  const StepDistribution dist = uniform_step_distribution(graph.group());
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(graph, dist, state.range(0), seed++, Functional::length(), false).samples.back());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(1000)->Arg(100000);

static void BM_EmpiricalReport(benchmark::State& state) {
  const auto spec = GroupSpec::coxeter_a(3);
  const CayleyGraph graph = build_cayley(spec);
  const Presentation p = presentation_of(spec);
  const StepDistribution dist = uniform_step_distribution(graph.group());
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_vs_limit(graph, p, dist, Functional::length(), 200, 10000, 1, 1).rows.size());
  }
}
BENCHMARK(BM_EmpiricalReport)->Unit(benchmark::kMillisecond);

static void BM_ExactLaw(benchmark::State& state) {
  const CayleyGraph graph = build_cayley(GroupSpec::coxeter_a(5));
  const StepDistribution dist = uniform_step_distribution(graph.group());
  for (auto _ : state) benchmark::DoNotOptimize(exact_law(graph, dist, state.range(0)).front());
}
BENCHMARK(BM_ExactLaw)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_KappaExact(benchmark::State& state) {
  const long long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kappa_exact(3 * N / 2, 4, N));
}
BENCHMARK(BM_KappaExact)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_TrueLengthProbability(benchmark::State& state) {
  const long long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(exact_probability(ProbabilityModel::TrueLength, N, 3 * N, 4));
}
BENCHMARK(BM_TrueLengthProbability)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

static void BM_PoincareE8(benchmark::State& state) {
  const auto degrees = degrees_of(CoxeterType::parse("E8"));
  for (auto _ : state) benchmark::DoNotOptimize(length_sums(degrees).total);
}
BENCHMARK(BM_PoincareE8)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
