#include "newsdesk/clustering/corpus.hpp"

#include "newsdesk/textproc/tokenize.hpp"

namespace newsdesk::clustering {

namespace {

VectorLookup lookup_in(const std::unordered_map<ArticleId, textproc::SparseVector>& vectors) {
  return [&vectors](const ArticleId& id) -> const textproc::SparseVector& {
    static const textproc::SparseVector kEmpty;
    auto it = vectors.find(id);
    return it == vectors.end() ? kEmpty : it->second;
  };
}

ClusteringResult finish(std::vector<WindowRun> runs, std::span<const Article> articles,
                        const ClusteringParams& params,
                        const std::unordered_map<ArticleId, textproc::SparseVector>& vectors) {
  const auto lookup = lookup_in(vectors);
  ClusteringResult result;
  TopicTracker tracker;
  for (const auto& run : runs) {
    tracker.add_window(run.window, run.graph, run.louvain.partition, lookup);
  }
  result.windows = std::move(runs);
  result.topics = tracker.topics();
  result.stories = merge_topics(result.topics, params.t2);

  std::unordered_map<ArticleId, const Article*> by_id;
  for (const auto& a : articles) by_id.emplace(a.id, &a);
  label_stories(result.stories, by_id, lookup);
  for (const auto& s : result.stories) {
    for (const auto& id : s.article_ids) result.story_of[id] = s.id;
  }
  return result;
}

}  // namespace

const Story* ClusteringResult::find_story(std::string_view id_or_slug) const {
  for (const auto& s : stories) {
    if (s.id == id_or_slug || s.slug == id_or_slug) return &s;
  }
  return nullptr;
}

std::unordered_map<ArticleId, textproc::SparseVector> corpus_vectors(
    std::span<const Article> articles, std::size_t min_df, const textproc::Lexicons& lexicons) {
  std::unordered_map<ArticleId, textproc::SparseVector> out;
  if (articles.empty()) return out;
  std::vector<textproc::Tokens> docs;
  docs.reserve(articles.size());
  for (const auto& a : articles) {
    docs.push_back(textproc::preprocess(a.title + "\n\n" + a.body, a.language, lexicons));
  }
  const auto vocab = textproc::fit_vocabulary(docs, min_df);
  for (std::size_t i = 0; i < articles.size(); ++i) {
    out[articles[i].id] = textproc::tfidf(docs[i], vocab);
  }
  return out;
}

ClusteringResult cluster_corpus(std::span<const Article> articles, const ClusteringParams& params,
                                const textproc::Lexicons& lexicons) {
  params.validate();
  const auto vectors = corpus_vectors(articles, params.min_df, lexicons);
  const auto lookup = lookup_in(vectors);
  std::vector<WindowRun> runs;
  for (auto& w : make_windows(articles, params)) {
    WindowRun run;
    run.graph = build_graph(w.article_ids, lookup, params.t1, params.weighted_edges);
    run.louvain = louvain(run.graph, {.seed = params.seed, .restarts = params.louvain_restarts});
    run.window = std::move(w);
    runs.push_back(std::move(run));
  }
  return finish(std::move(runs), articles, params, vectors);
}

ClusteringEngine::ClusteringEngine(ClusteringParams params, const textproc::Lexicons& lexicons)
    : params_(params), lexicons_(lexicons) {
  params_.validate();
}

std::size_t ClusteringEngine::cached_windows() const {
  std::lock_guard lock(mutex_);
  return frozen_.size();
}

ClusteringResult ClusteringEngine::run(std::span<const Article> articles, Timestamp now) {
  std::lock_guard lock(mutex_);
  const auto vectors = corpus_vectors(articles, params_.min_df, lexicons_);
  const auto lookup = lookup_in(vectors);
  std::vector<WindowRun> runs;
  for (auto& w : make_windows(articles, params_)) {
    WindowRun run;
    const auto key = to_unix(w.start);
    auto it = frozen_.find(key);
    if (it != frozen_.end() && it->second.article_ids == w.article_ids) {
      run.graph = it->second.graph;
      run.louvain = it->second.louvain;
      run.reused = true;
    } else {
      run.graph = build_graph(w.article_ids, lookup, params_.t1, params_.weighted_edges);
      run.louvain = louvain(run.graph, {.seed = params_.seed, .restarts = params_.louvain_restarts});
      if (w.end <= now) frozen_[key] = Frozen{w.article_ids, run.louvain, run.graph};
    }
    run.window = std::move(w);
    runs.push_back(std::move(run));
  }
  return finish(std::move(runs), articles, params_, vectors);
}

}  // namespace newsdesk::clustering
