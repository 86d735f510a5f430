#include <benchmark/benchmark.h>

#include <random>

#include "earkit/building.hpp"
#include "earkit/face_ring.hpp"
#include "earkit/generators.hpp"
#include "earkit/homology.hpp"
#include "earkit/linalg.hpp"
#include "earkit/weak_order.hpp"

using namespace earkit;

namespace {

ExactMatrix random_matrix(const Field& field, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  ExactMatrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, entry(rng));
  }
  return m;
}

void BM_RankRational(benchmark::State& state) {
  const auto m = random_matrix(Field::rationals(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(16)->Arg(32)->Arg(64);

void BM_RankPrime(benchmark::State& state) {
  const auto m = random_matrix(Field::prime(kDefaultPrime), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_BuildBuilding(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Building::build(n, q).num_chambers());
}
BENCHMARK(BM_BuildBuilding)->Args({3, 2})->Args({3, 5})->Args({4, 2})->Args({4, 3});

void BM_FanoEars(benchmark::State& state) {
  const Building b = Building::build(3, 2);
  const auto order = opposite_order(b, 0, "lex");
  for (auto _ : state) benchmark::DoNotOptimize(ear_decomposition(b, 0, order).report.m);
}
BENCHMARK(BM_FanoEars);

void BM_CmConnectivityFano(benchmark::State& state) {
  const Building b = Building::build(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cm_connectivity(b.complex(), Field::rationals()).connectivity);
}
BENCHMARK(BM_CmConnectivityFano);

void BM_FindG(benchmark::State& state) {
  const SimplicialComplex c = state.range(0) == 0 ? ps_sphere({3, 3}) : Building::build(3, 2).complex();
  const Field gf = Field::prime(kDefaultPrime);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(find_g_element(c, gf, 5, seed++).certificate.has_value());
}
BENCHMARK(BM_FindG)->Arg(0)->Arg(1);

void BM_DominanceAllPairs(benchmark::State& state) {
  const CoxeterGroup g = CoxeterGroup::symmetric(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_problem(g, 1, 0).pairs.size());
}
BENCHMARK(BM_DominanceAllPairs)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
