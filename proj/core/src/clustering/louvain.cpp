#include "newsdesk/clustering/louvain.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::clustering {

namespace {

constexpr double kGainEps = 1e-12;

// Graph of one Louvain level. Self-loops carry the weight of the edges
// collapsed into a node, each counted once.
struct Level {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
  std::vector<double> self;
  std::vector<double> k;
  double m2 = 0.0;

  std::size_t size() const { return adj.size(); }

  void finish() {
    k.assign(size(), 0.0);
    m2 = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      k[i] = 2.0 * self[i];
      for (const auto& [j, w] : adj[i]) k[i] += w;
      m2 += k[i];
    }
  }

  double modularity(const std::vector<std::size_t>& comm) const {
    if (m2 <= 0.0) return 0.0;
    std::vector<double> in(size(), 0.0);
    std::vector<double> tot(size(), 0.0);
    for (std::size_t i = 0; i < size(); ++i) {
      tot[comm[i]] += k[i];
      in[comm[i]] += 2.0 * self[i];
      for (const auto& [j, w] : adj[i]) {
        if (comm[j] == comm[i]) in[comm[i]] += w;
      }
    }
    double q = 0.0;
    for (std::size_t c = 0; c < size(); ++c) {
      q += in[c] / m2 - (tot[c] / m2) * (tot[c] / m2);
    }
    return q;
  }
};

Level level_from_graph(const SimilarityGraph& g) {
  Level l;
  l.adj.resize(g.node_count());
  l.self.assign(g.node_count(), 0.0);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    for (const auto& n : g.neighbors(i)) l.adj[i].emplace_back(n.node, n.weight);
  }
  l.finish();
  return l;
}

// Renumbers `comm` densely by first appearance; returns the count.
std::size_t renumber(std::vector<std::size_t>& comm) {
  std::vector<std::size_t> map(comm.size(), SIZE_MAX);
  std::size_t next = 0;
  for (auto& c : comm) {
    if (map[c] == SIZE_MAX) map[c] = next++;
    c = map[c];
  }
  return next;
}

Level aggregate(const Level& l, const std::vector<std::size_t>& comm, std::size_t n) {
  Level out;
  out.adj.resize(n);
  out.self.assign(n, 0.0);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < l.size(); ++i) members[comm[i]].push_back(i);
  std::vector<double> row(n, 0.0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < n; ++c) {
    touched.clear();
    for (auto i : members[c]) {
      out.self[c] += l.self[i];
      for (const auto& [j, wt] : l.adj[i]) {
        const auto d = comm[j];
        if (d == c) {
          out.self[c] += wt / 2.0;  // each internal edge is seen from both ends
        } else {
          if (row[d] == 0.0) touched.push_back(d);
          row[d] += wt;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto d : touched) {
      out.adj[c].emplace_back(d, row[d]);
      row[d] = 0.0;
    }
  }
  out.finish();
  return out;
}

void shuffle(std::vector<std::size_t>& order, std::mt19937_64& rng) {
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
}

// Phase one: local moves until no node can improve Q. Returns whether any
// node moved. `on_move` sees the level partition after each accepted move.
bool local_moves(const Level& l, std::vector<std::size_t>& comm, std::mt19937_64& rng,
                 const std::function<void(const std::vector<std::size_t>&)>& on_move) {
  const std::size_t n = l.size();
  std::vector<double> tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) tot[comm[i]] += l.k[i];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(order, rng);

  std::vector<double> to_comm(n, 0.0);
  std::vector<std::size_t> seen;
  bool any = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (auto i : order) {
      const auto own = comm[i];
      seen.clear();
      for (const auto& [j, w] : l.adj[i]) {
        const auto c = comm[j];
        if (to_comm[c] == 0.0) seen.push_back(c);
        to_comm[c] += w;
      }
      tot[own] -= l.k[i];
      auto gain = [&](std::size_t c) {
        return 2.0 * to_comm[c] / l.m2 - 2.0 * tot[c] * l.k[i] / (l.m2 * l.m2);
      };
      const double stay = gain(own);
      double best = stay;
      for (auto c : seen) best = std::max(best, gain(c));
      std::size_t target = own;
      if (best > stay + kGainEps) {
        std::sort(seen.begin(), seen.end());
        for (auto c : seen) {
          const double g = gain(c);
          if (g >= best - kGainEps && g > stay + kGainEps) {
            target = c;
            break;
          }
        }
      }
      tot[target] += l.k[i];
      if (target != own) {
        comm[i] = target;
        improved = true;
        any = true;
        if (on_move) on_move(comm);
      }
      for (auto c : seen) to_comm[c] = 0.0;
    }
  }
  return any;
}

std::uint64_t derived_seed(std::uint64_t seed, std::size_t run) {
  if (run == 0) return seed;
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * run;  // splitmix64
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Partition canonical_partition(std::span<const std::size_t> labels) {
  Partition out(labels.size());
  std::unordered_map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out[i] = ids.try_emplace(labels[i], ids.size()).first->second;
  }
  return out;
}

double modularity(const SimilarityGraph& graph, std::span<const std::size_t> partition) {
  if (partition.size() != graph.node_count()) {
    throw PartitionMismatch("partition size does not match the graph");
  }
  const Level l = level_from_graph(graph);
  const Partition canon = canonical_partition(partition);
  return l.modularity(canon);
}

namespace {

LouvainResult single_run(const SimilarityGraph& graph, const LouvainOptions& options) {
  LouvainResult result;
  const std::size_t n = graph.node_count();
  result.partition.resize(n);
  std::iota(result.partition.begin(), result.partition.end(), std::size_t{0});
  if (n == 0) {
    result.trace.push_back(0.0);
    return result;
  }

  const Level base = level_from_graph(graph);
  // Every trace entry is Q of the full partition evaluated on the base graph,
  // so accepted moves (gain > kGainEps) show up as strict increases.
  auto base_q = [&](const std::vector<std::size_t>& full) {
    return base.modularity(canonical_partition(full));
  };
  Level level = base;
  std::vector<std::size_t>& membership = result.partition;  // original node -> level node
  double q = base_q(membership);
  result.trace.push_back(q);
  if (level.m2 <= 0.0) {
    result.modularity = q;
    return result;
  }

  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> full(n);
  std::function<void(const std::vector<std::size_t>&)> record;
  if (options.record_moves) {
    record = [&](const std::vector<std::size_t>& c) {
      for (std::size_t v = 0; v < n; ++v) full[v] = c[membership[v]];
      result.trace.push_back(base_q(full));
    };
  }
  while (true) {
    std::vector<std::size_t> c(level.size());
    std::iota(c.begin(), c.end(), std::size_t{0});
    const bool moved = local_moves(level, c, rng, record);
    if (!moved) break;
    ++result.levels;
    const std::size_t count = renumber(c);
    for (auto& m : membership) m = c[m];
    level = aggregate(level, c, count);
    result.trace.push_back(base_q(membership));
    if (count == 1) break;
  }
  result.partition = canonical_partition(membership);
  result.modularity = modularity(graph, result.partition);
  return result;
}

}  // namespace

LouvainResult louvain(const SimilarityGraph& graph, const LouvainOptions& options) {
  LouvainResult best = single_run(graph, options);
  for (std::size_t run = 1; run < options.restarts; ++run) {
    LouvainOptions o = options;
    o.seed = derived_seed(options.seed, run);
    auto r = single_run(graph, o);
    if (r.modularity > best.modularity + 1e-12) best = std::move(r);
  }
  return best;
}

}  // namespace newsdesk::clustering
