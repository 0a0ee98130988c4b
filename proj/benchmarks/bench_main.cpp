#include <benchmark/benchmark.h>

#include "sl2c3/decompose.hpp"
#include "sl2c3/oracle.hpp"
#include "sl2c3/tensor.hpp"
#include "sl2c3/verify.hpp"

using namespace sl2c3;

namespace {

void BM_DecomposeTwoTimesT(benchmark::State& state) {
  const Field& f = gf(2);
  const Rep r = tensor(make_standard(2, f), make_T(f.gen(), f.one(), f.gen() + f.one()));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_lifting(r));
}
BENCHMARK(BM_DecomposeTwoTimesT);

void BM_DecomposeTTimesT(benchmark::State& state) {
  const Field& f = gf(1);
  const Rep r = tensor(make_T(f.one(), f.one(), f.zero()), make_T(f.from_int(2), f.from_int(2), f.zero()));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_lifting(r));
}
BENCHMARK(BM_DecomposeTTimesT);

void BM_OraclePredict(benchmark::State& state) {
  const Field& f = gf(2);
  const ModuleParams l = ModuleParams::T(f.gen(), f.one(), f.zero());
  const ModuleParams r = ModuleParams::T(f.one(), f.gen(), f.gen());
  for (auto _ : state) benchmark::DoNotOptimize(predict(l, r, f));
}
BENCHMARK(BM_OraclePredict);

void BM_SweepGF3(benchmark::State& state) {
  const Field& f = gf(1);
  const auto pairs = all_pairs(f);
  for (auto _ : state) benchmark::DoNotOptimize(run_pairs(pairs, f, false, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(pairs.size()));
}
BENCHMARK(BM_SweepGF3)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
