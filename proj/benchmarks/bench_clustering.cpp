#include <random>

#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "newsdesk/clustering/corpus.hpp"
#include "newsdesk/clustering/louvain.hpp"

using namespace newsdesk;

static void BM_CorpusVectors(benchmark::State& state) {
  const auto articles = bench::make_corpus(static_cast<std::size_t>(state.range(0)), 20, 12, 1);
  for (auto _ : state) benchmark::DoNotOptimize(clustering::corpus_vectors(articles, 2));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CorpusVectors)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_BuildGraph(benchmark::State& state) {
  const auto articles = bench::make_corpus(static_cast<std::size_t>(state.range(0)), 20, 6, 2);
  const auto vectors = clustering::corpus_vectors(articles, 2);
  std::vector<ArticleId> ids;
  for (const auto& a : articles) ids.push_back(a.id);
  for (auto _ : state) benchmark::DoNotOptimize(clustering::build_graph(ids, vectors, 0.31));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->RangeMultiplier(2)->Range(250, 2000)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_Louvain(benchmark::State& state) {
  // Planted partition: blocks of 25, dense inside, sparse across.
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = clustering::SimilarityGraph::with_nodes(n);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = i / 25 == j / 25;
      if (u(rng) < (same ? 0.5 : 0.01)) g.add_edge(i, j, 0.31 + 0.69 * u(rng));
    }
  }
  clustering::LouvainOptions opt;
  opt.restarts = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(clustering::louvain(g, opt));
}
BENCHMARK(BM_Louvain)->Args({500, 1})->Args({500, 16})->Args({2000, 1})->Unit(benchmark::kMillisecond);

static void BM_ClusterCorpus(benchmark::State& state) {
  const auto articles = bench::make_corpus(static_cast<std::size_t>(state.range(0)), 20, 24, 4);
  clustering::ClusteringParams params;
  for (auto _ : state) benchmark::DoNotOptimize(clustering::cluster_corpus(articles, params));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClusterCorpus)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_EngineIncrementalRun(benchmark::State& state) {
  // Old windows are frozen after the first run; later runs redo only the
  // active ones.
  const auto articles = bench::make_corpus(4000, 20, 60, 5);
  clustering::ClusteringEngine engine(clustering::ClusteringParams{});
  const auto now = from_unix(1556668800 + 61 * 86400);
  engine.run(articles, now);
  for (auto _ : state) benchmark::DoNotOptimize(engine.run(articles, now));
}
BENCHMARK(BM_EngineIncrementalRun)->Unit(benchmark::kMillisecond);
