#include <benchmark/benchmark.h>

#include "joints/curves.hpp"
#include "joints/generators.hpp"
#include "joints/joints.hpp"
#include "joints/partition.hpp"
#include "joints/poly.hpp"

namespace {

using namespace joints;

void BM_DetectJointsGrid(benchmark::State& state) {
  const auto cfg = grid_lines(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detect_joints(cfg));
  state.SetComplexityN(static_cast<std::int64_t>(cfg.size()));
}
BENCHMARK(BM_DetectJointsGrid)->DenseRange(2, 10, 2)->Complexity();

void BM_DetectJointsRandom(benchmark::State& state) {
  const auto cfg = random_lines(state.range(0), 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(detect_joints(cfg));
}
BENCHMARK(BM_DetectJointsRandom)->RangeMultiplier(2)->Range(16, 256);

void BM_BushMultiplicity(benchmark::State& state) {
  const auto cfg = bush_lines(state.range(0), 1);
  std::vector<Direction3> dirs;
  for (const auto& l : cfg.lines()) dirs.push_back(l.dir);
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(dirs));
}
BENCHMARK(BM_BushMultiplicity)->RangeMultiplier(2)->Range(10, 160);

void BM_Partition(benchmark::State& state) {
  const auto pts = random_points(state.range(0), 7);
  const double d = static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(guth_katz_partition(pts, d, 7));
}
BENCHMARK(BM_Partition)->Args({256, 3})->Args({512, 4})->Args({1000, 4})->Unit(benchmark::kMillisecond);

void BM_Resultant(benchmark::State& state) {
  // (x + y + 1)^n against x^n - y
  const auto n = static_cast<unsigned>(state.range(0));
  BiPoly base = BiPoly::from_terms({{{1, 0}, Scalar(1)}, {{0, 1}, Scalar(1)}, {{0, 0}, Scalar(1)}});
  BiPoly f = base;
  for (unsigned i = 1; i < n; ++i) f = f * base;
  const auto g = BiPoly::from_terms({{{n, 0}, Scalar(1)}, {{0, 1}, Scalar(-1)}});
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant(f, g));
}
BENCHMARK(BM_Resultant)->DenseRange(2, 8, 2);

void BM_CurveJoints(benchmark::State& state) {
  const auto curves = curve_bush(state.range(0), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(detect_curve_joints(curves));
}
BENCHMARK(BM_CurveJoints)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
