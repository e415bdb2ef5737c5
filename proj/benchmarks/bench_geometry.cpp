#include <benchmark/benchmark.h>

#include "qlc/klein.hpp"
#include "qlc/moduli.hpp"
#include "qlc/normal_form.hpp"
#include "qlc/surface.hpp"

namespace {

using namespace qlc;

void BM_SingularSurface(benchmark::State& st) {
  Pencil p = normal_form::paper_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(surface::singular_surface(p));
}
BENCHMARK(BM_SingularSurface)->Arg(1)->Arg(19)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_StructuralClass(benchmark::State& st) {
  MPoly q = surface::singular_surface(normal_form::paper_case(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(surface::structural_class(q));
}
BENCHMARK(BM_StructuralClass)->Arg(1)->Arg(20)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_StabilizerDim(benchmark::State& st) {
  Pencil p = normal_form::paper_case(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(moduli::stabilizer_dim(p));
}
BENCHMARK(BM_StabilizerDim)->Arg(1)->Arg(15)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_OrthonormalFrame(benchmark::State& st) {
  ScalarMatrix G = normal_form::paper_case(static_cast<int>(st.range(0))).G();
  for (auto _ : st) benchmark::DoNotOptimize(klein::orthonormal_frame(G));
}
BENCHMARK(BM_OrthonormalFrame)->Arg(1)->Arg(23)->Unit(benchmark::kMicrosecond);

void BM_Isomorphic(benchmark::State& st) {
  Pencil a = normal_form::paper_case(18), b = normal_form::paper_case(18);
  for (auto _ : st) benchmark::DoNotOptimize(moduli::isomorphic(a, b));
}
BENCHMARK(BM_Isomorphic)->Unit(benchmark::kMillisecond);

}  // namespace
