#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "newsdesk/clustering/graph.hpp"

namespace newsdesk::clustering {

/// Community of each node, numbered 0.. in order of first appearance.
using Partition = std::vector<std::size_t>;

/// Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j); zero for a graph
/// without edges. Throws PartitionMismatch on a size mismatch.
double modularity(const SimilarityGraph& graph, std::span<const std::size_t> partition);

/// Relabels communities in order of first appearance.
Partition canonical_partition(std::span<const std::size_t> labels);

struct LouvainOptions {
  std::uint64_t seed = 0;
  bool record_moves = false;  // one trace entry per accepted move
  /// Independent runs with derived seeds (the first uses `seed` itself); the
  /// partition with the highest modularity wins, earlier runs on ties.
  std::size_t restarts = 1;
};

struct LouvainResult {
  Partition partition;
  double modularity = 0.0;
  /// Q of the starting singleton partition, then Q after every accepted move
  /// (when recorded) and after every pass.
  std::vector<double> trace;
  std::size_t levels = 0;
};

/// Two-phase Louvain. Nodes are visited in a seeded shuffled order; a node
/// moves only when the best gain beats staying put, and among equal best
/// gains the lowest community id wins. Isolated nodes stay singletons. The
/// trace belongs to the winning run.
LouvainResult louvain(const SimilarityGraph& graph, const LouvainOptions& options = {});

}  // namespace newsdesk::clustering
