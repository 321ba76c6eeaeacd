#include <benchmark/benchmark.h>

#include "ksys/certificates.hpp"
#include "ksys/ksystems.hpp"
#include "ksys/oracle.hpp"
#include "ksys/search.hpp"

namespace {

using namespace ksys;

void BM_FacesCube(benchmark::State& state) {
  Instance cube = make_cube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(faces_from_incidence(cube, 2));
}
BENCHMARK(BM_FacesCube)->DenseRange(3, 7);

void BM_ValidateFacesCube(benchmark::State& state) {
  Instance cube = make_cube(static_cast<int>(state.range(0)));
  SetSystem f2 = faces_from_incidence(cube, 2);
  for (auto _ : state) benchmark::DoNotOptimize(validate_k_system(cube.graph, f2));
}
BENCHMARK(BM_ValidateFacesCube)->DenseRange(3, 7);

void BM_CountAcyclicFig1(benchmark::State& state) {
  Instance fig1 = make_fig1();
  unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_acyclic_orientations(fig1.graph, kDefaultBudget, jobs));
}
BENCHMARK(BM_CountAcyclicFig1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MinimizeH2Fig1(benchmark::State& state) {
  Instance fig1 = make_fig1();
  for (auto _ : state) benchmark::DoNotOptimize(minimize_hk(fig1.graph, 2, kDefaultBudget, 4));
}
BENCHMARK(BM_MinimizeH2Fig1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_KSystemsFig1(benchmark::State& state) {
  Instance fig1 = make_fig1();
  for (auto _ : state) benchmark::DoNotOptimize(collect_k_systems(fig1.graph, 2));
}
BENCHMARK(BM_KSystemsFig1)->Unit(benchmark::kMicrosecond);

void BM_MaxKSystemCube4(benchmark::State& state) {
  Instance cube = make_cube(4);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_k_system(cube.graph, k));
}
BENCHMARK(BM_MaxKSystemCube4)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FacetsFrom2FacesCube(benchmark::State& state) {
  Instance cube = make_cube(static_cast<int>(state.range(0)));
  SetSystem f2 = faces_from_incidence(cube, 2);
  for (auto _ : state) benchmark::DoNotOptimize(facets_from_2faces(cube.graph, f2));
}
BENCHMARK(BM_FacetsFrom2FacesCube)->DenseRange(3, 7);

void BM_VerifyFaceCertificateCube(benchmark::State& state) {
  Instance cube = make_cube(static_cast<int>(state.range(0)));
  std::vector<Rational> w;
  for (int i = 0; i < cube.dim(); ++i) w.emplace_back(1 << i);
  FaceCertificate c{2, faces_from_incidence(cube, 2), geometric_aof(cube, w)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_face_certificate(cube.graph, c));
}
BENCHMARK(BM_VerifyFaceCertificateCube)->DenseRange(3, 7);

}  // namespace

BENCHMARK_MAIN();
