#include "newsdesk/clustering/graph.hpp"

#include <cmath>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::clustering {

SimilarityGraph::SimilarityGraph(std::vector<std::string> nodes)
    : nodes_(std::move(nodes)), adjacency_(nodes_.size()) {}

SimilarityGraph SimilarityGraph::with_nodes(std::size_t n) {
  std::vector<std::string> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(std::to_string(i));
  return SimilarityGraph(std::move(nodes));
}

void SimilarityGraph::add_edge(std::size_t u, std::size_t v, double weight) {
  if (u >= nodes_.size() || v >= nodes_.size()) throw InvariantViolation("edge node out of range");
  if (u == v) throw InvariantViolation("self-loop in similarity graph");
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw InvariantViolation("edge weight must be positive and finite");
  }
  for (const auto& n : adjacency_[u]) {
    if (n.node == v) throw InvariantViolation("repeated edge in similarity graph");
  }
  edges_.push_back({u, v, weight});
  adjacency_[u].push_back({v, weight});
  adjacency_[v].push_back({u, weight});
  total_weight_ += weight;
}

double SimilarityGraph::degree(std::size_t node) const {
  double k = 0.0;
  for (const auto& n : adjacency_.at(node)) k += n.weight;
  return k;
}

SimilarityGraph SimilarityGraph::scaled(double factor) const {
  SimilarityGraph g(nodes_);
  for (const auto& e : edges_) g.add_edge(e.u, e.v, e.weight * factor);
  return g;
}

SimilarityGraph build_graph(std::span<const ArticleId> window, const VectorLookup& vectors,
                            double t1, bool weighted) {
  SimilarityGraph g(std::vector<std::string>(window.begin(), window.end()));
  std::vector<const textproc::SparseVector*> v;
  v.reserve(window.size());
  for (const auto& id : window) v.push_back(&vectors(id));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double sim = textproc::cosine(*v[i], *v[j]);
      if (sim >= t1 && sim > 0.0) g.add_edge(i, j, weighted ? sim : 1.0);
    }
  }
  return g;
}

SimilarityGraph build_graph(std::span<const ArticleId> window,
                            const std::unordered_map<ArticleId, textproc::SparseVector>& vectors,
                            double t1, bool weighted) {
  static const textproc::SparseVector kEmpty;
  return build_graph(
      window,
      [&](const ArticleId& id) -> const textproc::SparseVector& {
        auto it = vectors.find(id);
        return it == vectors.end() ? kEmpty : it->second;
      },
      t1, weighted);
}

}  // namespace newsdesk::clustering
