// Microbenchmarks for the hot paths: the induced edge permutation and its
// orbits, canonical forms, complex construction, and the census.

#include <benchmark/benchmark.h>

#include <random>

#include "sbw/census.hpp"
#include "sbw/complex.hpp"
#include "sbw/diagram.hpp"
#include "sbw/spec.hpp"

namespace {

sbw::SbwSpec random_spec(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> targets(2 * n);
  std::iota(targets.begin(), targets.end(), 0);
  std::shuffle(targets.begin(), targets.end(), rng);
  sbw::SbwSpec spec;
  spec.n = n;
  for (const int t : targets) spec.phi.push_back(sbw::negative_corner(t));
  return spec;
}

void BM_InducedBijectionAndOrbits(benchmark::State& state) {
  const sbw::SbwSpec spec = random_spec(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    const auto dec = sbw::orbit_decomposition(sbw::induced_edge_bijection(spec));
    benchmark::DoNotOptimize(dec.total());
  }
}
BENCHMARK(BM_InducedBijectionAndOrbits)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_CriterionCheck(benchmark::State& state) {
  const sbw::SbwSpec spec = random_spec(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) {
    const auto report = sbw::criterion_check(spec);
    benchmark::DoNotOptimize(report.orbit_count);
  }
}
BENCHMARK(BM_CriterionCheck)->Arg(8)->Arg(64);

void BM_CanonicalForm(benchmark::State& state) {
  const sbw::SbwSpec spec = random_spec(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    const auto bytes = sbw::canonical_form(spec);
    benchmark::DoNotOptimize(bytes.size());
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_BuildCubedComplex(benchmark::State& state) {
  const sbw::SbwSpec spec = random_spec(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    const auto c3 = sbw::build_cubed_complex(spec);
    benchmark::DoNotOptimize(c3.euler);
  }
}
BENCHMARK(BM_BuildCubedComplex)->Arg(8)->Arg(64);

void BM_BuildSurface(benchmark::State& state) {
  const sbw::SbwSpec spec = random_spec(static_cast<int>(state.range(0)), 19);
  for (auto _ : state) {
    const auto m = sbw::build_surface(spec);
    benchmark::DoNotOptimize(m.chi);
  }
}
BENCHMARK(BM_BuildSurface)->Arg(8)->Arg(64);

void BM_FromPd(benchmark::State& state) {
  // (2,k) torus knot diagram for odd k.
  const int k = static_cast<int>(state.range(0));
  std::string pd;
  for (int i = 1; i <= k; ++i) {
    const auto wrap = [&](int x) { return (x - 1) % (2 * k) + 1; };
    pd += "X " + std::to_string(2 * i - 1) + " " + std::to_string(wrap(2 * i - 1 + k)) +
          " " + std::to_string(2 * i) + " " + std::to_string(wrap(2 * i + k)) + "\n";
  }
  for (auto _ : state) {
    const auto spec = sbw::extract_sbw(
        sbw::checkerboard_coloring(sbw::trace_faces(sbw::parse_pd(pd))));
    benchmark::DoNotOptimize(spec.n);
  }
}
BENCHMARK(BM_FromPd)->Arg(7)->Arg(15)->Arg(31);

void BM_CensusReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto row = sbw::census_report(n, {});
    benchmark::DoNotOptimize(row.classes.size());
  }
}
BENCHMARK(BM_CensusReport)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
