#include <benchmark/benchmark.h>

#include "singequiv/bimodule.hpp"
#include "singequiv/dsg.hpp"
#include "singequiv/extension.hpp"
#include "singequiv/fixtures.hpp"
#include "singequiv/harness.hpp"

using namespace singequiv;

namespace {

AlgebraPtr load(const std::string& id, int r = 2) { return build_algebra(fixtures::by_name(id, r)).algebra(); }

Ideal ideal_at(const AlgebraPtr& a, const std::vector<std::string>& names) {
  std::vector<std::size_t> vs;
  for (const auto& n : names) vs.push_back(*a->find_vertex(n));
  return vertex_ideal(a, vs);
}

}  // namespace

static void BM_BuildE33(benchmark::State& state) {
  const Presentation p = fixtures::by_name("e33", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_algebra(p).algebra()->dim());
}
BENCHMARK(BM_BuildE33)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MinResolutionE31(benchmark::State& state) {
  const auto g = load("e31");
  const auto q = quotient_algebra(g, ideal_at(g, {"1"})).algebra;
  const Module s = simple(q, *q->find_vertex("c"));
  for (auto _ : state) benchmark::DoNotOptimize(min_resolution(s, static_cast<std::size_t>(state.range(0))).terms.size());
}
BENCHMARK(BM_MinResolutionE31)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TorSequenceE33(benchmark::State& state) {
  const auto g = load("e33");
  const Ideal j = ideal_at(g, {"1"});
  const Module jr = ideal_module(j, Side::Right), bl = quotient_by_ideal(j, Side::Left);
  for (auto _ : state) benchmark::DoNotOptimize(tor_sequence(jr, bl, 10).size());
}
BENCHMARK(BM_TorSequenceE33)->Unit(benchmark::kMillisecond);

static void BM_BimoduleCoverE33(benchmark::State& state) {
  const Bimodule x = regular_bimodule(load("e33"));
  for (auto _ : state) benchmark::DoNotOptimize(bimodule_projective_cover(x).kernel.dim());
}
BENCHMARK(BM_BimoduleCoverE33)->Unit(benchmark::kMillisecond);

static void BM_TheoremCheckE33(benchmark::State& state) {
  const auto g = load("e33");
  const Ideal j = ideal_at(g, {"1p", "2p", "3p"});
  for (auto _ : state) benchmark::DoNotOptimize(theorem_hypothesis_check(j).conclusion);
}
BENCHMARK(BM_TheoremCheckE33)->Unit(benchmark::kMillisecond);

static void BM_PeelChainE33(benchmark::State& state) {
  const auto g = load("e33");
  for (auto _ : state) benchmark::DoNotOptimize(peel_chain(g, {"1p", "2p", "3p"}).final->dim());
}
BENCHMARK(BM_PeelChainE33)->Unit(benchmark::kMillisecond);

static void BM_DsgHomDual(benchmark::State& state) {
  const auto du = load("dual");
  const Module s = simple(du, 0);
  for (auto _ : state) benchmark::DoNotOptimize(dsg_hom_dim(s, s, static_cast<int>(state.range(0))).value);
}
BENCHMARK(BM_DsgHomDual)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ShadowE33(benchmark::State& state) {
  const auto g = load("e33");
  const Ideal j = ideal_at(g, {"1p", "2p", "3p"});
  for (auto _ : state) benchmark::DoNotOptimize(equivalence_shadow(j, {-2, -1, 0, 1, 2}).matches());
}
BENCHMARK(BM_ShadowE33)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_Harness(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(run_harness({42, static_cast<std::size_t>(state.range(0)), 8}).violations.size());
}
BENCHMARK(BM_Harness)->Arg(10)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
