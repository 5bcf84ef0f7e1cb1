#include <benchmark/benchmark.h>

#include "gkm/algebra.hpp"
#include "gkm/connection.hpp"
#include "gkm/families.hpp"
#include "gkm/obstruction.hpp"

namespace {

void bm_build_br(benchmark::State& state) {
  int i = (int)state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(gkm::br_graph(i, 2));
}
BENCHMARK(bm_build_br)->Arg(3)->Arg(4)->Arg(5);

void bm_forced_transport(benchmark::State& state) {
  gkm::WeightHypergraph g = gkm::br_graph(4, 2);
  std::vector<int> edges;
  for (size_t r = 0; r < g.records.size(); ++r)
    if (g.records[r].dim == 1 && gkm::is_definite_at(g, (int)r))
      edges.push_back((int)r);
  for (auto _ : state)
    for (int e : edges) benchmark::DoNotOptimize(gkm::forced_transport(g, e));
}
BENCHMARK(bm_forced_transport);

void bm_cycle_obstruction(benchmark::State& state) {
  gkm::WeightHypergraph g = gkm::br_graph(3, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(gkm::cycle_obstruction(g, 6));
}
BENCHMARK(bm_cycle_obstruction);

void bm_face_exclusion(benchmark::State& state) {
  gkm::WeightHypergraph g = gkm::r_graph(3, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(gkm::face_exclusion_obstruction(g, 3, 64));
}
BENCHMARK(bm_face_exclusion);

void bm_annihilator(benchmark::State& state) {
  gkm::GradedZAlgebra a =
      gkm::ring_tensor(gkm::ring_bf(3, "x"), gkm::ring_projective(2, "y"));
  gkm::IntVec cls = gkm::gen_element(a, "x3");
  gkm::IntVec y = gkm::gen_element(a, "y");
  for (size_t t = 0; t < cls.size(); ++t) cls[t] += y[t];
  for (auto _ : state) benchmark::DoNotOptimize(gkm::annihilator(a, cls));
}
BENCHMARK(bm_annihilator);

}  // namespace

BENCHMARK_MAIN();
