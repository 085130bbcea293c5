#pragma once

#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "newsdesk/model/article.hpp"
#include "newsdesk/textproc/sparse_vector.hpp"

namespace newsdesk::clustering {

struct Edge {
  std::size_t u;
  std::size_t v;
  double weight;
};

/// Undirected weighted graph without self-loops over labelled nodes.
class SimilarityGraph {
 public:
  struct Neighbor {
    std::size_t node;
    double weight;
  };

  SimilarityGraph() = default;
  explicit SimilarityGraph(std::vector<std::string> nodes);
  /// Nodes labelled "0".."n-1".
  static SimilarityGraph with_nodes(std::size_t n);

  /// Throws InvariantViolation for a self-loop, a non-positive weight, an
  /// out-of-range node or a repeated pair.
  void add_edge(std::size_t u, std::size_t v, double weight);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(std::size_t node) const { return adjacency_.at(node); }
  /// Sum of incident edge weights.
  double degree(std::size_t node) const;
  /// Sum of all edge weights (m).
  double total_weight() const noexcept { return total_weight_; }

  SimilarityGraph scaled(double factor) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  double total_weight_ = 0.0;
};

using VectorLookup = std::function<const textproc::SparseVector&(const ArticleId&)>;

/// All-pairs cosine over normalized vectors; an edge joins i and j iff
/// sim >= t1. With `weighted` false edges get weight 1 instead of sim.
SimilarityGraph build_graph(std::span<const ArticleId> window, const VectorLookup& vectors,
                            double t1, bool weighted = true);
SimilarityGraph build_graph(std::span<const ArticleId> window,
                            const std::unordered_map<ArticleId, textproc::SparseVector>& vectors,
                            double t1, bool weighted = true);

}  // namespace newsdesk::clustering
