// Serial reference vs OpenMP cell evaluation on the same jobs.

#include <benchmark/benchmark.h>

#include "weyl/eulerian.hpp"
#include "weyl/homology.hpp"
#include "weyl/models.hpp"
#include "weyl/parallel.hpp"

using namespace weyl;

namespace {

ExecPolicy policyOf(const benchmark::State& s) { return s.range(0) ? ExecPolicy::Parallel : ExecPolicy::Serial; }

void BM_EulerianTopCohomology3(benchmark::State& state) {
  const auto policy = policyOf(state);
  for (auto _ : state) {
    // fresh model per iteration so memoized pieces are recomputed
    auto m = cechLocalCohomologyModel(3, {{0}, {1}, {2}}, 3);
    benchmark::DoNotOptimize(checkGeneralizedEulerian(*m, {-14, -3}, 10, std::nullopt, policy));
  }
}

void BM_DerhamCatalog2(benchmark::State& state) {
  HomologyOptions opts;
  opts.policy = policyOf(state);
  for (auto _ : state)
    for (const auto& m : catalogLocalCohomology(2))
      benchmark::DoNotOptimize(torAgainstRr(m, {0, 1, 2}, {-12, 6}, opts));
}

void BM_TorOverR(benchmark::State& state) {
  HomologyOptions opts;
  opts.policy = policyOf(state);
  for (auto _ : state) {
    auto e = cechLocalCohomologyModel(2, {{0}, {1}}, 2);
    benchmark::DoNotOptimize(torOverR(e, e, {0, 1, 2}, {-10, 0}, opts));
  }
}

}  // namespace

BENCHMARK(BM_EulerianTopCohomology3)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerhamCatalog2)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorOverR)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configureThreads();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
