#include <benchmark/benchmark.h>

#include "elliskernel/covering.hpp"
#include "elliskernel/kernel.hpp"
#include "elliskernel/rees.hpp"
#include "elliskernel/substitution.hpp"

namespace {

using namespace elliskernel;

Substitution rudin_shapiro() {
  return Substitution::from_strings({'a', 'b', 'c', 'd'},
                                    {"ac", "dc", "ab", "db"});
}

void BM_SemigroupClose(benchmark::State& state) {
  std::vector<FiniteMap> cols =
      expand_columns(rudin_shapiro().power(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(TransformationSemigroup::close(cols));
  }
}
BENCHMARK(BM_SemigroupClose);

void BM_Language(benchmark::State& state) {
  Substitution tm = Substitution::from_strings({'a', 'b'}, {"ab", "ba"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(language(tm, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Language)->Arg(16)->Arg(64);

void BM_KernelReport(benchmark::State& state) {
  Substitution rs = rudin_shapiro();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_report(rs));
  }
}
BENCHMARK(BM_KernelReport);

void BM_ReesIsomorphism(benchmark::State& state) {
  Substitution rs = rudin_shapiro();
  ReesPresentation p = build_kernel(simplify(rs).substitution).presentation;
  ReesPresentation m2 = m2_example();
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_isomorphic(p, m2));
  }
}
BENCHMARK(BM_ReesIsomorphism);

void BM_WindowOracle(benchmark::State& state) {
  Substitution rs = simplify(rudin_shapiro()).substitution;
  for (auto _ : state) {
    benchmark::DoNotOptimize(window_oracle(rs, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_WindowOracle)->Arg(3)->Arg(5);

void BM_CocycleSearch(benchmark::State& state) {
  Substitution fib3 = Substitution::from_strings({'a', 'b'}, {"aabab", "aab"});
  GroupTable s3 = GroupTable::symmetric(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_cocycles(fib3, s3));
  }
}
BENCHMARK(BM_CocycleSearch);

}  // namespace

BENCHMARK_MAIN();
