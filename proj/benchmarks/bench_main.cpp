#include <benchmark/benchmark.h>

#include "optima/config.hpp"
#include "optima/descent.hpp"
#include "optima/lattice.hpp"
#include "optima/lp_euclid.hpp"
#include "optima/lp_sphere.hpp"
#include "optima/potential.hpp"
#include "optima/specfun.hpp"

using namespace optima;

static void BM_GegenbauerValuesDouble(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  double t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gegenbauer_values<double>(8, k, t));
    t = t > 0.9 ? -0.9 : t + 1e-3;
  }
}
BENCHMARK(BM_GegenbauerValuesDouble)->Arg(8)->Arg(16)->Arg(32);

static void BM_GegenbauerExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gegenbauer(8, k));
}
BENCHMARK(BM_GegenbauerExact)->Arg(8)->Arg(16);

static void BM_E8DistanceDistribution(benchmark::State& state) {
  const Configuration c = e8_roots();
  for (auto _ : state) benchmark::DoNotOptimize(distance_distribution(c));
}
BENCHMARK(BM_E8DistanceDistribution)->Unit(benchmark::kMillisecond);

static void BM_EnergyDouble(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> x = random_sphere_points(3, n, 1);
  const Potential f = Potential::parse("coulomb");
  for (auto _ : state) benchmark::DoNotOptimize(energy(3, x, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnergyDouble)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

static void BM_EnergyHigh(benchmark::State& state) {
  const Configuration c = icosahedron();
  const Potential f = Potential::parse("coulomb");
  for (auto _ : state) benchmark::DoNotOptimize(energy(c, f));
}
BENCHMARK(BM_EnergyHigh);

static void BM_LatticeEnumeration(benchmark::State& state) {
  const Lattice l = e8();
  const double r2 = static_cast<double>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = for_each_vector(l, r2, {}, [](const std::vector<std::int64_t>&, double) {});
    benchmark::DoNotOptimize(count);
  }
  state.counters["vectors"] = static_cast<double>(count);
}
BENCHMARK(BM_LatticeEnumeration)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Descent(benchmark::State& state) {
  DescentOptions o;
  o.count = static_cast<std::size_t>(state.range(0));
  o.restarts = 1;
  const Potential f = Potential::parse("coulomb");
  for (auto _ : state) benchmark::DoNotOptimize(minimize_energy(o, f).energy);
}
BENCHMARK(BM_Descent)->Arg(12)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_IcosahedronCertificate(benchmark::State& state) {
  const Configuration c = icosahedron();
  const Potential f = Potential::parse("coulomb");
  for (auto _ : state) benchmark::DoNotOptimize(hermite_certificate(c, f).bound);
}
BENCHMARK(BM_IcosahedronCertificate)->Unit(benchmark::kMillisecond);

static void BM_ForcedRootsAux(benchmark::State& state) {
  OptimizeOptions o;
  o.dimension = 8;
  o.degree = static_cast<int>(state.range(0));
  o.strategy = AuxStrategy::forced_roots;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_aux(o).check.density_bound);
}
BENCHMARK(BM_ForcedRootsAux)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
