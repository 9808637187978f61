// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "dynr/classify.hpp"
#include "dynr/orbit.hpp"
#include "dynr/projection.hpp"
#include "dynr/twist.hpp"
#include "dynr/verma.hpp"

using namespace dynr;

static void BM_FieldArithmetic(benchmark::State& state) {
  const ContextPtr ctx = Context::make({"p", "q"});
  const FieldElement p = FieldElement::variable(ctx, "p"), q = FieldElement::variable(ctx, "q");
  for (auto _ : state) {
    FieldElement acc(0);
    for (int i = 1; i <= state.range(0); ++i) acc += (p + FieldElement(i)) / (q - FieldElement(i));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldArithmetic)->Arg(4)->Arg(8)->Arg(16);

static void BM_ClassifyA(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  const RootSystem rs('A', rank);
  const std::vector<Root> delta{rs.simple_roots().front()};
  for (auto _ : state) {
    const LieAlgebra g = realize_lie_algebra(rs, std::vector<Root>{});
    const auto fam = build_coefficients(make_spec(rs, delta, {}));
    benchmark::DoNotOptimize(check_in_M_Omega(g, coefficients_to_tensor(g, fam)).member());
  }
}
BENCHMARK(BM_ClassifyA)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_AbrrTwistEquation(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_dynamical_twist(abrr_twist(N), N).passed());
}
BENCHMARK(BM_AbrrTwistEquation)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_StarProduct(benchmark::State& state) {
  OrbitFunction a(FieldElement(1)), b(FieldElement(1));
  for (int i = 0; i < state.range(0); ++i) {
    a = a * orbit_function("x");
    b = b * orbit_function("y");
  }
  for (auto _ : state) benchmark::DoNotOptimize(star_product(a, b));
}
BENCHMARK(BM_StarProduct)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_VermaOracle(benchmark::State& state) {
  const FiniteModule V(static_cast<int>(state.range(0))), W(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(compose_and_extract(V, W, zero_weight_vector(V), zero_weight_vector(W)).passed());
}
BENCHMARK(BM_VermaOracle)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ProjectTwist(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const SplittingData sp = split_basis_sl2();
  const TwistSeries J = abrr_twist(N);
  for (auto _ : state) benchmark::DoNotOptimize(project_twist(J, sp));
}
BENCHMARK(BM_ProjectTwist)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
