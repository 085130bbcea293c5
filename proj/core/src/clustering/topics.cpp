#include "newsdesk/clustering/topics.hpp"

#include <algorithm>
#include <numeric>

#include "newsdesk/common/hash.hpp"

namespace newsdesk::clustering {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);  // root stays the oldest
  }
};

}  // namespace

textproc::SparseVector centroid_of(const std::set<ArticleId>& ids, const VectorLookup& vectors) {
  textproc::SparseAccumulator acc;
  for (const auto& id : ids) acc.add(vectors(id));
  return acc.mean().normalized();
}

std::vector<Topic> merge_windows(std::vector<Topic> prev, const Window& window,
                                 const SimilarityGraph& graph, const Partition& partition,
                                 const VectorLookup& vectors) {
  const std::size_t communities =
      partition.empty() ? 0 : *std::max_element(partition.begin(), partition.end()) + 1;
  std::vector<std::vector<ArticleId>> members(communities);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    members[partition[i]].push_back(graph.nodes()[i]);
  }

  std::unordered_map<ArticleId, std::size_t> owner;
  for (std::size_t t = 0; t < prev.size(); ++t) {
    for (const auto& id : prev[t].article_ids) owner[id] = t;
  }
  std::vector<bool> alive(prev.size(), true);
  std::vector<bool> dirty(prev.size(), false);

  for (std::size_t c = 0; c < communities; ++c) {
    std::vector<std::size_t> hits;
    for (const auto& id : members[c]) {
      auto it = owner.find(id);
      if (it != owner.end()) hits.push_back(it->second);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    std::size_t target;
    if (hits.empty()) {
      Topic t;
      t.id = "w" + std::to_string(window.index) + "-c" + std::to_string(c);
      t.start = window.start;
      t.end = window.end;
      target = prev.size();
      prev.push_back(std::move(t));
      alive.push_back(true);
      dirty.push_back(true);
    } else {
      target = hits.front();
      for (std::size_t h = 1; h < hits.size(); ++h) {
        auto& other = prev[hits[h]];
        for (const auto& id : other.article_ids) owner[id] = target;
        prev[target].article_ids.insert(other.article_ids.begin(), other.article_ids.end());
        prev[target].start = std::min(prev[target].start, other.start);
        prev[target].end = std::max(prev[target].end, other.end);
        alive[hits[h]] = false;
      }
      prev[target].start = std::min(prev[target].start, window.start);
      prev[target].end = std::max(prev[target].end, window.end);
      dirty[target] = true;
    }
    for (const auto& id : members[c]) {
      prev[target].article_ids.insert(id);
      owner[id] = target;
    }
  }

  std::vector<Topic> out;
  out.reserve(prev.size());
  for (std::size_t t = 0; t < prev.size(); ++t) {
    if (!alive[t]) continue;
    if (dirty[t]) prev[t].centroid = centroid_of(prev[t].article_ids, vectors);
    out.push_back(std::move(prev[t]));
  }
  return out;
}

void TopicTracker::add_window(const Window& window, const SimilarityGraph& graph,
                              const Partition& partition, const VectorLookup& vectors) {
  topics_ = merge_windows(std::move(topics_), window, graph, partition, vectors);
}

std::vector<Story> merge_topics(std::span<const Topic> topics, double t2) {
  UnionFind uf(topics.size());
  for (std::size_t i = 0; i < topics.size(); ++i) {
    for (std::size_t j = i + 1; j < topics.size(); ++j) {
      if (textproc::cosine(topics[i].centroid, topics[j].centroid) >= t2) uf.unite(i, j);
    }
  }
  std::vector<Story> stories;
  std::unordered_map<std::size_t, std::size_t> story_of_root;
  for (std::size_t i = 0; i < topics.size(); ++i) {
    const auto root = uf.find(i);
    auto [it, inserted] = story_of_root.try_emplace(root, stories.size());
    if (inserted) stories.emplace_back();
    auto& s = stories[it->second];
    s.topic_ids.push_back(topics[i].id);
    s.article_ids.insert(topics[i].article_ids.begin(), topics[i].article_ids.end());
  }
  for (auto& s : stories) {
    s.id = s.article_ids.empty() ? "s-empty"
                                 : "s" + to_hex64(fnv1a64(*s.article_ids.begin()));
  }
  return stories;
}

std::string make_slug(std::string_view title, std::string_view story_id) {
  constexpr std::size_t kMaxSlug = 60;
  std::vector<std::string> words(1);
  for (char ch : title) {
    const auto c = static_cast<unsigned char>(ch);
    const bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    if (!alnum) {
      if (!words.back().empty()) words.emplace_back();
      continue;
    }
    words.back().push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
  }
  std::string slug;
  for (const auto& w : words) {
    if (w.empty()) continue;
    if (slug.empty()) {
      slug = w.substr(0, kMaxSlug);  // one overlong word is cut
    } else if (slug.size() + 1 + w.size() <= kMaxSlug) {
      slug += "-" + w;
    } else {
      break;
    }
  }
  if (slug.empty()) slug = "story";
  std::string suffix(story_id.substr(story_id.empty() || story_id[0] != 's' ? 0 : 1));
  if (suffix.size() > 8) suffix.resize(8);
  return slug + "-" + suffix;
}

void label_stories(std::vector<Story>& stories,
                   const std::unordered_map<ArticleId, const Article*>& articles,
                   const VectorLookup& vectors) {
  for (auto& s : stories) {
    s.centroid = centroid_of(s.article_ids, vectors);
    const Article* best = nullptr;
    double best_sim = -1.0;
    for (const auto& id : s.article_ids) {
      auto it = articles.find(id);
      if (it == articles.end()) continue;
      const Article* a = it->second;
      const double sim = textproc::cosine(vectors(id), s.centroid);
      const bool better =
          !best || sim > best_sim + 1e-12 ||
          (sim >= best_sim - 1e-12 &&
           (a->published_at < best->published_at ||
            (a->published_at == best->published_at && a->id < best->id)));
      if (better) {
        best = a;
        best_sim = std::max(sim, best_sim);
      }
    }
    s.title = best ? best->title : std::string();
    s.slug = make_slug(s.title, s.id);
  }
}

}  // namespace newsdesk::clustering
