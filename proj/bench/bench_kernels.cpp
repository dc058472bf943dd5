// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "permorbit/automorphisms.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/gn.hpp"
#include "permorbit/kernels.hpp"
#include "permorbit/lemmas.hpp"

using namespace permorbit;

namespace {

// Degree 7 scans all 5040 elements of Sym(7).
PermutationGroup scan_group() { return dihedral_natural(7); }

void BM_NormaliserScan(benchmark::State& state) {
  const auto g = scan_group();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(normaliser_in_symmetric_group(g, parallel));
}
BENCHMARK(BM_NormaliserScan)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OrbitLengths(benchmark::State& state) {
  // Aut((Z/2)^4) has 20160 elements acting on 16 points.
  AutOptions options;
  options.aut_cap = kHardAutCap;
  const auto auts = automorphism_group(abelian_regular({2, 2, 2, 2}), options);
  const auto& maps = auts.maps();
  const std::size_t n = 16;
  for (auto _ : state) {
    if (state.range(0) != 0) {
      benchmark::DoNotOptimize(kernels::orbit_lengths_parallel(maps, n));
    } else {
      benchmark::DoNotOptimize(kernels::orbit_lengths_serial(maps, n));
    }
  }
}
BENCHMARK(BM_OrbitLengths)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GnOrbitMasks(benchmark::State& state) {
  const gn::GnGroup g(3);
  for (auto _ : state) {
    if (state.range(0) != 0) {
      benchmark::DoNotOptimize(gn::orbit_masks_parallel(g));
    } else {
      benchmark::DoNotOptimize(gn::orbit_masks_serial(g));
    }
  }
}
BENCHMARK(BM_GnOrbitMasks)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AdaptedBasisSweep(benchmark::State& state) {
  lemmas::LemmaOptions options;
  options.max_exponent_p2 = 7;
  options.max_exponent_p3 = 5;
  options.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(lemmas::check_adapted_bases(options));
}
BENCHMARK(BM_AdaptedBasisSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
