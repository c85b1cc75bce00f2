#include <benchmark/benchmark.h>

#include "linkgate/alexander.hpp"
#include "linkgate/intmatrix.hpp"
#include "linkgate/link_codec.hpp"

using namespace linkgate;

static void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = (i * 7 + j * 3) % 11 - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_LaurentGcd(benchmark::State& state) {
  LaurentPoly f = parse_poly("t1*t2 - t1 - t2 + 2", 2);
  LaurentPoly a = f * parse_poly("t1^3 + t2 - 3", 2);
  LaurentPoly b = f * parse_poly("t2^2 - t1 + 5", 2);
  for (auto _ : state) benchmark::DoNotOptimize(laurent_gcd(a, b));
}
BENCHMARK(BM_LaurentGcd);

static void BM_TorsionPoly(benchmark::State& state) {
  LinkDiagram d = builtin_link("solomon");
  WirtingerResult w = wirtinger(d);
  FoxMatrix j = fox_matrix(w.pres, w.mmap);
  for (auto _ : state) benchmark::DoNotOptimize(torsion_alexander(j));
}
BENCHMARK(BM_TorsionPoly);

BENCHMARK_MAIN();
