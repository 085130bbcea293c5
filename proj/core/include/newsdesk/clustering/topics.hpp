#pragma once

#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "newsdesk/clustering/graph.hpp"
#include "newsdesk/clustering/louvain.hpp"
#include "newsdesk/clustering/windows.hpp"

namespace newsdesk::clustering {

struct Topic {
  std::string id;  // "w<window>-c<community>" of its oldest constituent
  std::set<ArticleId> article_ids;
  textproc::SparseVector centroid;  // normalized mean of member vectors
  Timestamp start{};
  Timestamp end{};

  friend bool operator==(const Topic&, const Topic&) = default;
};

textproc::SparseVector centroid_of(const std::set<ArticleId>& ids, const VectorLookup& vectors);

/// Folds one window's communities into the running topic list: a community
/// sharing an article with existing topics is unioned with all of them
/// (transitively); the rest become new topics. The merged topic keeps the id
/// of the oldest one and its position in the list. Windows must arrive in
/// chronological order.
std::vector<Topic> merge_windows(std::vector<Topic> prev, const Window& window,
                                 const SimilarityGraph& graph, const Partition& partition,
                                 const VectorLookup& vectors);

/// Incremental form of merge_windows.
class TopicTracker {
 public:
  void add_window(const Window& window, const SimilarityGraph& graph, const Partition& partition,
                  const VectorLookup& vectors);
  const std::vector<Topic>& topics() const noexcept { return topics_; }

 private:
  std::vector<Topic> topics_;
};

struct Story {
  std::string id;
  std::vector<std::string> topic_ids;
  std::set<ArticleId> article_ids;
  std::string title;
  std::string slug;
  textproc::SparseVector centroid;

  friend bool operator==(const Story&, const Story&) = default;
};

/// Connected components of the topic meta-graph with an edge wherever
/// centroid cosine >= t2. Stories come out in order of their first topic.
/// Story ids derive from the smallest member article id; title and slug are
/// left empty (see label_stories).
std::vector<Story> merge_topics(std::span<const Topic> topics, double t2);

/// Title from the member article closest to the story centroid (ties: the
/// earliest, then smallest id) and a URL slug built from it.
void label_stories(std::vector<Story>& stories,
                   const std::unordered_map<ArticleId, const Article*>& articles,
                   const VectorLookup& vectors);

/// Lowercase ASCII words of `title` joined by '-', at most 60 bytes, plus a
/// short suffix from `story_id`.
std::string make_slug(std::string_view title, std::string_view story_id);

}  // namespace newsdesk::clustering
