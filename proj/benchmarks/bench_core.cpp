#include <benchmark/benchmark.h>

#include <string>

#include "hyparr/arrangement.hpp"
#include "hyparr/canonical.hpp"
#include "hyparr/oscomplex.hpp"
#include "hyparr/regions.hpp"

namespace {

hyparr::Arrangement fixture(const std::string& name) {
  return hyparr::load_arrangement(std::string(HYPARR_FIXTURE_DIR) + "/" + name + ".json");
}

void BM_Poset(benchmark::State& state) {
  const auto a = fixture("FIX-B5");
  for (auto _ : state) benchmark::DoNotOptimize(hyparr::IntersectionPoset(a).size());
}
BENCHMARK(BM_Poset);

void BM_Kernel(benchmark::State& state) {
  const auto a = fixture("FIX-A5");
  for (auto _ : state) {
    const hyparr::OSComplex c(a);
    benchmark::DoNotOptimize(c.finite_distance_basis().size());
  }
}
BENCHMARK(BM_Kernel);

void BM_Regions(benchmark::State& state) {
  const auto a = fixture("FIX-B5");
  for (auto _ : state) benchmark::DoNotOptimize(hyparr::enumerate_regions(a).size());
}
BENCHMARK(BM_Regions);

void BM_CanonicalBasis(benchmark::State& state) {
  const auto a = fixture("FIX-A5");
  const hyparr::OSComplex c(a);
  for (auto _ : state) benchmark::DoNotOptimize(hyparr::canonical_basis_check(c).forms.size());
}
BENCHMARK(BM_CanonicalBasis);

}  // namespace

BENCHMARK_MAIN();
