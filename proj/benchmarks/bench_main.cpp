#include "wblow/cohomology.hpp"
#include "wblow/graded_piece.hpp"
#include "wblow/linalg.hpp"
#include "wblow/sod.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace wblow;

namespace {

const Truncation kTrunc{2, 1, 12};

WeightedCentre centre(const std::vector<std::string>& vars, std::vector<std::pair<std::string, int>> fs) {
  const GradedRing r = make_base_ring(vars);
  std::vector<CentreEntry> es;
  for (auto& [f, d] : fs) es.push_back({r.parse(f), d});
  return WeightedCentre(r, es);
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> val(-4, 4), sparse(0, 3);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& row : rows) {
    for (auto& v : row) v = sparse(rng) == 0 ? make_rational(val(rng), 1) : make_rational(0, 1);
  }
  const LinearMap m = LinearMap::from_rows(rows, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank_kernel_cokernel(m).rank);
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(48)->Arg(96);

void BM_WindowedPiece(benchmark::State& state) {
  const auto bp = extended_rees_presentation(centre({"x", "y"}, {{"x", 2}, {"y", 1}}));
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GradedPieceBasis(bp.ring, {-1, 2}, bound).dim());
}
BENCHMARK(BM_WindowedPiece)->Arg(2)->Arg(4)->Arg(8);

void BM_ProjCech(benchmark::State& state) {
  const GradedRing point = make_base_ring({});
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_proj_cohomology_cech(point, {1, 2, 3}, r, kTrunc).cells.size());
}
BENCHMARK(BM_ProjCech)->Arg(-10)->Arg(0)->Arg(10);

void BM_BlowupCech(benchmark::State& state) {
  const auto bp = extended_rees_presentation(centre({"x", "y"}, {{"x", 2}, {"y", 1}}));
  const int r = static_cast<int>(state.range(0));
  const auto aux = aux_window(bp, r, 2);
  for (auto _ : state) benchmark::DoNotOptimize(blowup_cohomology_cech(bp, r, kTrunc, aux).cells.size());
}
BENCHMARK(BM_BlowupCech)->Arg(-4)->Arg(-1)->Arg(1);

void BM_SodReport(benchmark::State& state) {
  const auto c = state.range(0) == 0 ? centre({"x", "y"}, {{"x", 1}, {"y", 1}})
                                     : centre({"x", "y"}, {{"x", 2}, {"y", 1}});
  for (auto _ : state) benchmark::DoNotOptimize(sod_report(c, kTrunc).overall);
}
BENCHMARK(BM_SodReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
