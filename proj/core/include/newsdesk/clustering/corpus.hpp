#pragma once

#include <map>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "newsdesk/clustering/params.hpp"
#include "newsdesk/clustering/topics.hpp"
#include "newsdesk/textproc/lexicon.hpp"
#include "newsdesk/textproc/tfidf.hpp"

namespace newsdesk::clustering {

struct WindowRun {
  Window window;
  SimilarityGraph graph;
  LouvainResult louvain;
  bool reused = false;  // partition taken from the engine cache
};

struct ClusteringResult {
  std::vector<WindowRun> windows;
  std::vector<Topic> topics;
  std::vector<Story> stories;
  std::map<ArticleId, std::string> story_of;  // article -> story id

  const Story* find_story(std::string_view id_or_slug) const;
};

/// TF-IDF vectors (title + body, vocabulary fitted on the corpus with
/// params.min_df) for every article. Articles with no surviving terms get an
/// empty vector.
std::unordered_map<ArticleId, textproc::SparseVector> corpus_vectors(
    std::span<const Article> articles, std::size_t min_df,
    const textproc::Lexicons& lexicons = textproc::Lexicons::builtin());

/// Windows, per-window Louvain, window merging and topic merging over the
/// whole corpus in one batch.
ClusteringResult cluster_corpus(std::span<const Article> articles, const ClusteringParams& params,
                                const textproc::Lexicons& lexicons = textproc::Lexicons::builtin());

/// Repeated batch clustering of a growing corpus. Partitions of windows that
/// ended at or before `now` are frozen once computed and reused while the
/// window's article set is unchanged; the active windows are recomputed on
/// every run.
class ClusteringEngine {
 public:
  explicit ClusteringEngine(ClusteringParams params,
                            const textproc::Lexicons& lexicons = textproc::Lexicons::builtin());

  ClusteringResult run(std::span<const Article> articles, Timestamp now);

  const ClusteringParams& params() const noexcept { return params_; }
  std::size_t cached_windows() const;

 private:
  struct Frozen {
    std::vector<ArticleId> article_ids;
    LouvainResult louvain;
    SimilarityGraph graph;
  };

  ClusteringParams params_;
  const textproc::Lexicons& lexicons_;
  mutable std::mutex mutex_;
  std::map<std::int64_t, Frozen> frozen_;  // keyed by window start (unix seconds)
};

}  // namespace newsdesk::clustering
