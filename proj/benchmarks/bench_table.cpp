#include "charvan/builtin.hpp"
#include "charvan/chartable.hpp"
#include "charvan/cyclotomic.hpp"

#include <benchmark/benchmark.h>

using namespace charvan;

static void BM_TableS5(benchmark::State& state) {
  BuiltinGroup b = builtin_group("S5");
  auto cd = ClassData::compute(b.group);
  for (auto _ : state) {
    CharacterTable t = CharacterTable::dixon(cd);
    benchmark::DoNotOptimize(t.rows());
  }
}
BENCHMARK(BM_TableS5);

static void BM_TableSz448(benchmark::State& state) {
  BuiltinGroup b = builtin_group("SzSylNorm8");
  auto cd = ClassData::compute(b.group);
  for (auto _ : state) {
    CharacterTable t = CharacterTable::dixon(cd);
    benchmark::DoNotOptimize(t.rows());
  }
}
BENCHMARK(BM_TableSz448);

static void BM_CycloMul(benchmark::State& state) {
  Cyclotomic a = Cyclotomic::root_of_unity(60, 7) + Cyclotomic::from_int(3, 60);
  Cyclotomic b = Cyclotomic::root_of_unity(60, 11) - Cyclotomic::from_int(1, 60);
  for (auto _ : state) {
    Cyclotomic c = a * b;
    benchmark::DoNotOptimize(c.is_zero());
  }
}
BENCHMARK(BM_CycloMul);
