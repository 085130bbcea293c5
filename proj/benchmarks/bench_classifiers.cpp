#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "newsdesk/classifiers/propaganda.hpp"
#include "newsdesk/classifiers/section.hpp"

using namespace newsdesk;

static void BM_SectionTrain(benchmark::State& state) {
  const auto articles = bench::make_corpus(static_cast<std::size_t>(state.range(0)), 6, 12, 6);
  std::vector<classifiers::SectionExample> examples;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    examples.push_back({classifiers::article_text(articles[i]), Language::en,
                        from_index<SectionLabel>(i % 6)});
  }
  classifiers::TrainConfig cfg;
  cfg.max_iter = 100;
  for (auto _ : state) benchmark::DoNotOptimize(classifiers::SectionClassifier::train(examples, cfg, 2));
}
BENCHMARK(BM_SectionTrain)->Arg(600)->Arg(3000)->Unit(benchmark::kMillisecond);

static void BM_PropagandaFeatures(benchmark::State& state) {
  const auto articles = bench::make_corpus(64, 4, 4, 7);
  std::size_t bytes = 0;
  for (const auto& a : articles) bytes += a.body.size();
  for (auto _ : state) {
    for (const auto& a : articles) benchmark::DoNotOptimize(classifiers::propaganda_features(a.body));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_PropagandaFeatures);
