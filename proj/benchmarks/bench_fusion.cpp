#include <benchmark/benchmark.h>

#include "fusion/analysis.hpp"
#include "fusion/families.hpp"
#include "fusion/fpdim.hpp"
#include "fusion/grading.hpp"
#include "fusion/isomorphism.hpp"
#include "fusion/ring.hpp"
#include "fusion/structure.hpp"

using namespace fusion;

// state.range(0) is the verlinde level, so rank = level + 1.
static void BM_VerifyRing(benchmark::State& state) {
  FusionRing r = gen_verlinde(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_ring(r).ok);
}
BENCHMARK(BM_VerifyRing)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_FPdim(benchmark::State& state) {
  FusionRing r = gen_verlinde(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fpdim_ring(r));
}
BENCHMARK(BM_FPdim)->Arg(8)->Arg(16)->Arg(32);

static void BM_UniversalGrading(benchmark::State& state) {
  FusionRing r = gen_gen_ty(abelian_group({4, 2, 2}), std::vector<int>{0}, 0);  // rank 32
  for (auto _ : state) benchmark::DoNotOptimize(universal_grading(r).components.size());
}
BENCHMARK(BM_UniversalGrading);

static void BM_AllSubrings(benchmark::State& state) {
  FusionRing r = gen_ty(abelian_group({2, 2, 2}));  // rank 9, 2^9 subsets
  for (auto _ : state) benchmark::DoNotOptimize(all_subrings(r).size());
}
BENCHMARK(BM_AllSubrings);

static void BM_IsoSearch(benchmark::State& state) {
  // dual pair of relabelings; the pointed block forces real backtracking
  FusionRing a = deligne_product(gen_pointed(abelian_group({2, 2, 2})), gen_ising());
  FusionRing b = deligne_product(gen_ising(), gen_pointed(abelian_group({2, 2, 2})));
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b).has_value());
}
BENCHMARK(BM_IsoSearch);

static void BM_TheoremSuite(benchmark::State& state) {
  FusionRing r = gen_moore_read();
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem_suite(r).all_pass());
}
BENCHMARK(BM_TheoremSuite);

BENCHMARK_MAIN();
