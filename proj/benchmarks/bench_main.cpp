#include <benchmark/benchmark.h>

#include "fflambda/arithgeo.hpp"
#include "fflambda/charsum.hpp"
#include "fflambda/deformation.hpp"
#include "fflambda/lfunction.hpp"
#include "fflambda/sweep.hpp"

namespace {

using namespace fflambda;

GoodPair witness(std::uint64_t q) {
  return check_good(parse_poly(field_of_order(q), "T^" + std::to_string(q) + "-T"));
}

}  // namespace

// Character-sum L-polynomial of T^q - T.
static void BM_ComputeL(benchmark::State& state) {
  const GoodPair pair = witness(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_L(pair));
}
BENCHMARK(BM_ComputeL)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ComputeLQuintic(benchmark::State& state) {
  const GoodPair pair = check_good(parse_poly(field_of_order(5), "T^5+2*T^2+1"));
  for (auto _ : state) benchmark::DoNotOptimize(compute_L(pair));
}
BENCHMARK(BM_ComputeLQuintic)->Unit(benchmark::kMillisecond);

// Bisection path in genus 1 and 2.
static void BM_LambdaBisection(benchmark::State& state) {
  LambdaOptions opts;
  opts.force_bisection = true;
  const LData L = state.range(0) == 1 ? LData{5, 1, {1, 3, 5}, std::nullopt}
                                      : compute_L(check_good(parse_poly(field_of_order(5), "T^5+2*T^2+1")));
  for (auto _ : state) benchmark::DoNotOptimize(compute_lambda(L, opts));
}
BENCHMARK(BM_LambdaBisection)->Arg(1)->Arg(2);

static void BM_GaussS(benchmark::State& state) {
  const FieldPtr F = field_of_order(7);
  const CharSpec spec{F, F->one()};
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_S(spec, n));
}
BENCHMARK(BM_GaussS)->DenseRange(1, 3);

static void BM_TraceOfFrobenius(benchmark::State& state) {
  const WeierstrassQ E = WeierstrassQ::x0_11();
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ap(E, p));
}
BENCHMARK(BM_TraceOfFrobenius)->Arg(1009)->Arg(10007)->Arg(100003);
BENCHMARK_MAIN();
