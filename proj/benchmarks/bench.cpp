#include <benchmark/benchmark.h>

#include "charvar/character_variety.hpp"
#include "charvar/cyclo.hpp"
#include "charvar/diophantine.hpp"
#include "charvar/orbit.hpp"
#include "charvar/quaternion.hpp"

namespace {

using namespace charvar;

void BM_CycloMul(benchmark::State& state) {
  const CycloReal a = CycloReal::two_cos(RationalAngle(1, 5));
  const CycloReal b = CycloReal::two_cos(RationalAngle(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

void BM_TwoCos(benchmark::State& state) {
  const auto den = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(CycloReal::two_cos(RationalAngle(1, den)));
}
BENCHMARK(BM_TwoCos)->Arg(7)->Arg(30)->Arg(101);

void BM_AsTwoCos(benchmark::State& state) {
  const CycloReal v = CycloReal::two_cos(RationalAngle(3, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(v.as_two_cos());
}
BENCHMARK(BM_AsTwoCos)->Arg(7)->Arg(30);

void BM_GroupClosureC(benchmark::State& state) {
  const auto& g = generators();
  for (auto _ : state) benchmark::DoNotOptimize(group_closure({g.T, g.U}, 256));
}
BENCHMARK(BM_GroupClosureC);

void BM_ExactOrbit(benchmark::State& state) {
  const ExactPoint p{CycloReal(1), CycloReal(1), CycloReal(1)};
  for (auto _ : state) benchmark::DoNotOptimize(exact_orbit(p));
}
BENCHMARK(BM_ExactOrbit);

void BM_FloatOrbit(benchmark::State& state) {
  const FloatPoint p{0.5, 0.5, 0.5};
  WordPolicy policy;
  for (auto _ : state)
    benchmark::DoNotOptimize(float_orbit(p, static_cast<std::size_t>(state.range(0)), policy, 7));
}
BENCHMARK(BM_FloatOrbit)->Arg(10'000)->Arg(100'000);

void BM_EpsilonDensity(benchmark::State& state) {
  const FloatPoint p{0.5, 0.5, 0.5};
  const double k = boundary_trace(p);
  const auto orbit = float_orbit(p, 100'000, WordPolicy{}, 7).points;
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_density(orbit, k, 0.05, 2000));
}
BENCHMARK(BM_EpsilonDensity);

void BM_SearchVanishing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_vanishing(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SearchVanishing)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
