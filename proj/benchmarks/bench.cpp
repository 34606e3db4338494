#include <benchmark/benchmark.h>

#include "okb/analysis.hpp"
#include "okb/fixtures.hpp"
#include "okb/minkowski.hpp"
#include "okb/okounkov.hpp"
#include "okb/polygon.hpp"
#include "okb/zariski.hpp"

using namespace okb;

// Exact-arithmetic hot paths.  Classes are chosen so the work is nontrivial:
// nonempty negative parts, multi-segment walks, the full 21-element basis.

static void BM_decompose_quartic(benchmark::State& state) {
  SurfaceModel m = fixtures::quartic();
  DivisorClass d({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m, d));
}
BENCHMARK(BM_decompose_quartic);

static void BM_decompose_dp6(benchmark::State& state) {
  SurfaceModel m = fixtures::del_pezzo_six();
  DivisorClass d({1, 3, 0, 0});  // H + 3E1: negative part 4E1
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m, d));
}
BENCHMARK(BM_decompose_dp6);

static void BM_enumerate_chambers_dp6(benchmark::State& state) {
  SurfaceModel m = fixtures::del_pezzo_six();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(m));
}
BENCHMARK(BM_enumerate_chambers_dp6);

static void BM_okounkov_polygon(benchmark::State& state) {
  SurfaceModel m = fixtures::del_pezzo_six();
  DivisorClass d({3, 0, -1, -1});
  Flag flag{DivisorClass({3, -1, -1, -1})};
  for (auto _ : state) benchmark::DoNotOptimize(okounkov_polygon(m, d, flag));
}
BENCHMARK(BM_okounkov_polygon);

static void BM_minkowski_basis_dp6(benchmark::State& state) {
  SurfaceModel m = fixtures::del_pezzo_six();
  Flag flag{DivisorClass({3, -1, -1, -1})};
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_basis(m, flag));
}
BENCHMARK(BM_minkowski_basis_dp6);

static void BM_minkowski_sum(benchmark::State& state) {
  SurfaceModel m = fixtures::del_pezzo_six();
  RationalPolygon p =
      okounkov_polygon(m, DivisorClass({3, -1, -1, -1}), Flag{DivisorClass({1, 0, 0, 0})});
  RationalPolygon q =
      okounkov_polygon(m, DivisorClass({3, 0, -1, -1}), Flag{DivisorClass({1, 0, 0, 0})});
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(p, q));
}
BENCHMARK(BM_minkowski_sum);

static void BM_numeq_report(benchmark::State& state) {
  SurfaceModel m = fixtures::quartic();
  DivisorClass d1({3, 2, 1}), d2({2, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(numerically_equivalent(m, d1, d2));
}
BENCHMARK(BM_numeq_report);

BENCHMARK_MAIN();
