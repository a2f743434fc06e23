// Serial reference vs OpenMP for the parallel kernels. Range argument 0 is
// serial, 1 is parallel.

#include <benchmark/benchmark.h>

#include "frobcalc/fsing/fsing.hpp"
#include "frobcalc/polyring/io.hpp"
#include "frobcalc/random.hpp"
#include "frobcalc/tate/split.hpp"

using namespace frobcalc;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_RationalPoints(benchmark::State& state) {
  auto ring = parse_ring("GF(31)[x,y,z]");
  const Ideal surface = parse_ideal(ring, "x^3 + y^3 + z^3 - x*y*z - 1");
  for (auto _ : state) benchmark::DoNotOptimize(rational_points(surface, mode(state)));
}
BENCHMARK(BM_RationalPoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ScanLocus(benchmark::State& state) {
  auto ring = parse_ring("GF(13)[x,y,z]");
  const QuotientPresentation pres{parse_ideal(ring, "x*y*z + x^4 + y^4")};
  const Ideal locus = locus_ideal(pres, Polynomial::constant(ring, 1), BracketExponent(1));
  for (auto _ : state) benchmark::DoNotOptimize(scan_locus(locus, pres.defining_ideal, mode(state)));
}
BENCHMARK(BM_ScanLocus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Filtration(benchmark::State& state) {
  auto ring = make_ring(3, {"x1", "x2", "x3"});
  for (auto _ : state) benchmark::DoNotOptimize(filtration_verify(3, 5, ring, mode(state)));
}
BENCHMARK(BM_Filtration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SplitApproximant(benchmark::State& state) {
  gen::Rng rng(7);
  const RestrictedSeries f = gen::series(rng, 3, 3, 2, 8, 120, -6, 12, 4);
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_split_approximant(f, Rational(2), mode(state)));
}
BENCHMARK(BM_SplitApproximant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
