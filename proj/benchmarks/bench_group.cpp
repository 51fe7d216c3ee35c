#include "charvan/builtin.hpp"
#include "charvan/subgroups.hpp"

#include <benchmark/benchmark.h>

using namespace charvan;

static void BM_BuildS6(benchmark::State& state) {
  for (auto _ : state) {
    BuiltinGroup b = builtin_group("S6");
    benchmark::DoNotOptimize(b.group.order());
  }
}
BENCHMARK(BM_BuildS6);

static void BM_ClassesS6(benchmark::State& state) {
  BuiltinGroup b = builtin_group("S6");
  for (auto _ : state) {
    auto cd = ClassData::compute(b.group);
    benchmark::DoNotOptimize(cd->count());
  }
}
BENCHMARK(BM_ClassesS6);

static void BM_SylowSz448(benchmark::State& state) {
  BuiltinGroup b = builtin_group("SzSylNorm8");
  for (auto _ : state) {
    PermGroup s = sylow(b.group, 2);
    benchmark::DoNotOptimize(s.order());
  }
}
BENCHMARK(BM_SylowSz448);

static void BM_FittingS4(benchmark::State& state) {
  BuiltinGroup b = builtin_group("S4");
  for (auto _ : state) {
    PermGroup f = fitting(b.group);
    benchmark::DoNotOptimize(f.order());
  }
}
BENCHMARK(BM_FittingS4);
