#include <benchmark/benchmark.h>

#include <vector>

#include "conceptgraph/baselines.hpp"
#include "conceptgraph/block_growth.hpp"
#include "conceptgraph/metrics.hpp"
#include "conceptgraph/rng.hpp"

namespace cg = conceptgraph;

namespace {

void BM_AddClique(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  cg::Rng rng(1);
  std::vector<std::vector<cg::NodeId>> blocks(256);
  for (auto& block : blocks) {
    std::vector<bool> used(12000, false);
    while (block.size() < size) {
      const auto v = static_cast<cg::NodeId>(rng.uniform_below(12000));
      if (!used[v]) {
        used[v] = true;
        block.push_back(v);
      }
    }
  }
  for (auto _ : state) {
    cg::UndirectedGraph graph(12000);
    for (const auto& block : blocks) graph.add_clique(block);
    benchmark::DoNotOptimize(graph.link_count());
  }
  state.SetItemsProcessed(state.iterations() * 256 * size * (size - 1) / 2);
}
BENCHMARK(BM_AddClique)->Arg(10)->Arg(37)->Arg(200);

void BM_FullReportEr(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graph = cg::erdos_renyi({n, n * 50, 3});
  for (auto _ : state) benchmark::DoNotOptimize(cg::full_report(graph));
  state.SetItemsProcessed(state.iterations() * graph.link_count());
}
BENCHMARK(BM_FullReportEr)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_ErdosRenyi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cg::erdos_renyi({n, n * 100, ++seed}).link_count());
  }
}
BENCHMARK(BM_ErdosRenyi)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_BarabasiAlbert(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cg::barabasi_albert({m, m, 2000, ++seed}).link_count());
  }
}
BENCHMARK(BM_BarabasiAlbert)->Arg(5)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SelectConcepts(benchmark::State& state) {
  const auto selection = state.range(0) == 0 ? cg::Selection::uniform
                                             : cg::Selection::preferential;
  std::vector<std::uint64_t> counts(12000);
  cg::Rng init(2);
  for (auto& c : counts) c = 1 + init.uniform_below(500);
  auto growth = cg::GrowthState::with_counts(selection, counts);
  cg::Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth.select_concepts(37, 8.8e-3, rng).novel);
  }
  state.SetItemsProcessed(state.iterations() * 37);
}
BENCHMARK(BM_SelectConcepts)->Arg(0)->Arg(1);

void BM_GenerateCorpus(benchmark::State& state) {
  cg::ModelConfig config;
  config.articles = static_cast<std::size_t>(state.range(0));
  config.nu = 8.8e-3;
  for (auto _ : state) {
    ++config.seed;
    benchmark::DoNotOptimize(cg::generate_corpus(config).concept_count);
  }
}
BENCHMARK(BM_GenerateCorpus)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
