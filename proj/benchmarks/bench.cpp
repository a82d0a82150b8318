#include "filiform/catalog.hpp"
#include "filiform/identities.hpp"
#include "filiform/leibniz.hpp"
#include "filiform/repr.hpp"

#include <benchmark/benchmark.h>

using namespace filiform;

static void BM_CheckLeibnizExtension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LeibnizExtension ext = build_QL(build_W(n), derive_action(build_rep_W(n)));
  for (auto _ : state) benchmark::DoNotOptimize(check_leibniz(ext.table));
  state.SetComplexityN(2 * n);
}
BENCHMARK(BM_CheckLeibnizExtension)->Arg(5)->Arg(10)->Arg(15)->Arg(20)->Complexity();

static void BM_CheckJacobiCatalog(benchmark::State& state) {
  const StructureTable table = build_W(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(table));
}
BENCHMARK(BM_CheckJacobiCatalog)->Arg(10)->Arg(20);

static void BM_BuildRepW(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rep_W(n));
}
BENCHMARK(BM_BuildRepW)->Arg(10)->Arg(20)->Arg(40);

static void BM_VerifyHomomorphism(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const StructureTable table = build_W(n);
  const MatrixRep rep = build_rep_W(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_homomorphism(table, rep));
}
BENCHMARK(BM_VerifyHomomorphism)->Arg(10)->Arg(20);

static void BM_VectorizedRank(benchmark::State& state) {
  const MatrixRep rep = build_rep_W(static_cast<int>(state.range(0)));
  std::vector<Vec> rows;
  for (const auto& m : rep.images) rows.push_back(m.vectorized());
  for (auto _ : state) {
    auto copy = rows;
    benchmark::DoNotOptimize(rank(std::move(copy)));
  }
}
BENCHMARK(BM_VectorizedRank)->Arg(10)->Arg(20)->Arg(40);

static void BM_SeriesProfile(benchmark::State& state) {
  const StructureTable table = build_eta({LeibnizFamily::eta, {0, 0, 0, 0}}).table;
  for (auto _ : state) benchmark::DoNotOptimize(series_profile(table));
}
BENCHMARK(BM_SeriesProfile);

BENCHMARK_MAIN();
