#include <benchmark/benchmark.h>

#include "bisetforge/biset.hpp"
#include "bisetforge/burnside_ring.hpp"
#include "bisetforge/linalg.hpp"
#include "bisetforge/path_algebra.hpp"
#include "bisetforge/perm_groups.hpp"
#include "bisetforge/workbench.hpp"

using namespace bisetforge;

namespace {

const Workbench& wb() {
  static const Workbench w(BISETFORGE_BENCH_FIXTURE_DIR);
  return w;
}

void BM_SubgroupClasses(benchmark::State& state) {
  const PermGroup g = s3::product_group();
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_class_reps(g));
}
BENCHMARK(BM_SubgroupClasses)->Unit(benchmark::kMillisecond);

void BM_TableByDoubleCosets(benchmark::State& state) {
  auto ctx = BisetContext::s3();
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants_by_double_cosets(*ctx));
}
BENCHMARK(BM_TableByDoubleCosets)->Unit(benchmark::kMillisecond);

void BM_TableByOrbits(benchmark::State& state) {
  auto ctx = BisetContext::s3();
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants_by_orbits(*ctx, ctx));
}
BENCHMARK(BM_TableByOrbits)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  const auto& r = BurnsideRing::s3();
  auto x = r.make(wb().fixtures().peirce.idempotent("e"), Ring::Q);
  auto y = r.make(wb().fixtures().peirce.idempotent("eps4"), Ring::Q);
  for (auto _ : state) benchmark::DoNotOptimize(r.multiply(r.add(x, y), y));
}
BENCHMARK(BM_Multiply);

void BM_RepresentationMatrix(benchmark::State& state) {
  const auto& w = wb();
  for (auto _ : state) {
    LambdaOrder order(w.ring(), w.gamma(), w.fixtures().blocks, w.fixtures().matrix);
    benchmark::DoNotOptimize(order.representation_matrix());
  }
}
BENCHMARK(BM_RepresentationMatrix)->Unit(benchmark::kMillisecond);

void BM_SmithForm(benchmark::State& state) {
  const IntMatrix m = wb().order().integral_representation();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithForm)->Unit(benchmark::kMillisecond);

void BM_QuotientBasis(benchmark::State& state) {
  Presentation p = wb().presentation("local2");
  for (auto _ : state) benchmark::DoNotOptimize(quotient_basis(p.quiver, p.relations, p.ring));
}
BENCHMARK(BM_QuotientBasis)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
