#include <gtest/gtest.h>

#include <chrono>

#include "newsdesk/clustering/corpus.hpp"
#include "newsdesk/clustering/metrics.hpp"
#include "support/synthetic.hpp"

using namespace newsdesk;
using namespace newsdesk::clustering;

namespace {

std::map<std::string, std::string> predicted(const ClusteringResult& r) {
  return {r.story_of.begin(), r.story_of.end()};
}

}  // namespace

TEST(ClusteringE2E, SyntheticTopicsAreRecovered) {
  const auto corpus = newsdesk::testing::make_topic_corpus({});
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = cluster_corpus(corpus.articles, ClusteringParams{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ASSERT_EQ(r.story_of.size(), corpus.articles.size());
  const auto b = bcubed_f1(predicted(r), corpus.gold);
  const auto p = pairwise_f1(predicted(r), corpus.gold);
  EXPECT_GE(b.f1, 0.95);
  EXPECT_GE(p.f1, 0.95);
  EXPECT_LT(secs, 5.0);
}

TEST(ClusteringE2E, DeterministicAcrossRuns) {
  const auto corpus = newsdesk::testing::make_topic_corpus({.seed = 2});
  const auto a = cluster_corpus(corpus.articles, ClusteringParams{});
  const auto b = cluster_corpus(corpus.articles, ClusteringParams{});
  EXPECT_EQ(a.stories, b.stories);
  EXPECT_EQ(a.story_of, b.story_of);
}

TEST(ClusteringE2E, StoriesHaveTitlesAndSlugs) {
  const auto corpus = newsdesk::testing::make_topic_corpus({});
  const auto r = cluster_corpus(corpus.articles, ClusteringParams{});
  for (const auto& s : r.stories) {
    EXPECT_FALSE(s.title.empty());
    EXPECT_EQ(r.find_story(s.slug), &s);
    EXPECT_EQ(r.find_story(s.id), &s);
  }
}

TEST(ClusteringE2E, EngineFreezesClosedWindows) {
  const auto corpus = newsdesk::testing::make_topic_corpus({});
  ClusteringEngine engine{ClusteringParams{}};
  const auto now = from_unix(1556668800 + 12 * 86400);
  const auto first = engine.run(corpus.articles, now);
  EXPECT_GT(engine.cached_windows(), 0u);
  const auto second = engine.run(corpus.articles, now);
  std::size_t reused = 0;
  for (const auto& w : second.windows) reused += w.reused;
  EXPECT_EQ(reused, engine.cached_windows());
  EXPECT_EQ(first.stories, second.stories);
  EXPECT_EQ(second.stories, cluster_corpus(corpus.articles, ClusteringParams{}).stories);
}

TEST(ClusteringE2E, EmptyCorpus) {
  const auto r = cluster_corpus(std::vector<Article>{}, ClusteringParams{});
  EXPECT_TRUE(r.stories.empty());
}
