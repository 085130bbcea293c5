#include <random>

#include <benchmark/benchmark.h>

#include "newsdesk/profiles/valence.hpp"

using namespace newsdesk;

static void BM_Valence(benchmark::State& state) {
  std::mt19937_64 rng(8);
  std::vector<profiles::GroupCitationCounts> counts(4096);
  for (auto& c : counts) {
    c.total_c0 = 1 + rng() % 1000000;
    c.total_c1 = 1 + rng() % 1000000;
    c.tf_c0 = 1 + rng() % c.total_c0;
    c.tf_c1 = rng() % (c.total_c1 + 1);
  }
  for (auto _ : state) {
    for (const auto& c : counts) benchmark::DoNotOptimize(profiles::valence(c));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * counts.size()));
}
BENCHMARK(BM_Valence);

static void BM_ValenceRecords(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::vector<profiles::GroupCitationCounts> counts;
  for (int m = 0; m < 500; ++m) {
    for (int t = 0; t < 20; ++t) {
      profiles::GroupCitationCounts c;
      c.medium_id = "m" + std::to_string(m);
      c.topic_id = "t" + std::to_string(t);
      c.total_c0 = 1000;
      c.total_c1 = 1000;
      c.tf_c0 = rng() % 50;
      c.tf_c1 = rng() % 50;
      counts.push_back(std::move(c));
    }
  }
  profiles::ValenceConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(profiles::valence_records(counts, cfg));
}
BENCHMARK(BM_ValenceRecords)->Unit(benchmark::kMillisecond);
