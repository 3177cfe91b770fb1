#include <benchmark/benchmark.h>

#include "minorlab/embedding.hpp"
#include "minorlab/flow.hpp"
#include "minorlab/generators.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/surface.hpp"

using namespace minorlab;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_VertexConnectivity(benchmark::State& state) {
  Rng rng(1);
  auto g = random_gnp(120, 0.15, rng);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g, mode(state)));
}
BENCHMARK(BM_VertexConnectivity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ThreeConnectivity(benchmark::State& state) {
  auto g = refine_all_faces(refine_all_faces(torus_grid_embedding(4))).graph();
  for (auto _ : state) benchmark::DoNotOptimize(is_k_connected(g, 3, mode(state)));
}
BENCHMARK(BM_ThreeConnectivity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FaceWidth(benchmark::State& state) {
  auto e = refine_all_faces(torus_grid_embedding(4));
  FaceWidthOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(face_width(e, opts).value);
}
BENCHMARK(BM_FaceWidth)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FindMinor(benchmark::State& state) {
  auto host = grid_graph(5, 5);
  MinorSearchOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(find_minor(host, complete_graph(5), opts).status);
}
BENCHMARK(BM_FindMinor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
