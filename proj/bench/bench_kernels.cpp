// Serial reference vs OpenMP for each parallel kernel. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <memory>

#include "fga/parallel.hpp"
#include "fga/text.hpp"

namespace {

using namespace fga;

struct Setup {
  explicit Setup(const char* text) : sys(build_system(parse_group_string(text))), g(sys), grp(g), cx(grp), dyn(cx) {}
  CoxeterSystem sys;
  Garside g;
  ArtinGroup grp;
  Complex cx;
  Dynamics dyn;
};

const Setup& a3() {
  static const auto s = std::make_unique<Setup>("generators: a b c\nm: a b 3\nm: b c 3\n");
  return *s;
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Ball(benchmark::State& st) {
  const auto& s = a3();
  for (auto _ : st) benchmark::DoNotOptimize(build_ball(s.cx, s.grp.base_vertex(), 4, exec_of(st)));
}

void BM_DistanceMatrix(benchmark::State& st) {
  const auto& s = a3();
  const Ball b = s.cx.ball(s.grp.base_vertex(), 2);
  for (auto _ : st) benchmark::DoNotOptimize(distance_matrix(s.cx, b.vertices, exec_of(st)));
}

void BM_CenterSearch(benchmark::State& st) {
  const auto& s = a3();
  const Ball search = s.cx.ball(s.grp.base_vertex(), 3);
  const Ball pts = s.cx.ball(s.grp.base_vertex(), 1);
  for (auto _ : st) benchmark::DoNotOptimize(center_search(s.cx, pts.vertices, search, exec_of(st)));
}

void BM_LinkCensus(benchmark::State& st) {
  const auto& s = a3();
  const Ball b = s.cx.ball(s.grp.base_vertex(), 2);
  for (auto _ : st) benchmark::DoNotOptimize(link_census(s.cx, b.vertices, exec_of(st)));
}

void BM_TorsionCensus(benchmark::State& st) {
  const auto& s = a3();
  std::vector<ArtinElement> elements;
  for (const auto& p : s.dyn.delta_free_forms(1))
    for (int k = 0; k < 2; ++k) elements.push_back(ArtinElement{k, p});
  for (auto _ : st) benchmark::DoNotOptimize(torsion_census(s.dyn, elements, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_Ball)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CenterSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinkCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorsionCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
