#include <benchmark/benchmark.h>

#include "qlc/normal_form.hpp"
#include "qlc/segre.hpp"

namespace {

using namespace qlc;

// table rows 1 (generic), 12 and 23 (most eigenvalue coincidence)
void BM_SegreMinors(benchmark::State& st) {
  Pencil p = normal_form::paper_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(segre::segre_symbol(p));
}
BENCHMARK(BM_SegreMinors)->Arg(1)->Arg(12)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_SegreSmith(benchmark::State& st) {
  Pencil p = normal_form::paper_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(segre::segre_symbol_snf(p));
}
BENCHMARK(BM_SegreSmith)->Arg(1)->Arg(12)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_SegreJordan(benchmark::State& st) {
  Pencil p = normal_form::paper_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(segre::segre_symbol_jordan(p));
}
BENCHMARK(BM_SegreJordan)->Arg(1)->Arg(12)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& st) {
  for (auto _ : st)
    for (int n = 1; n <= 23; ++n) benchmark::DoNotOptimize(normal_form::paper_case(n));
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMillisecond);

}  // namespace
