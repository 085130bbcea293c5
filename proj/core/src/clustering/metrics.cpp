#include "newsdesk/clustering/metrics.hpp"

#include <unordered_map>
#include <vector>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::clustering {

namespace {

double harmonic(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

struct PairHash {
  std::size_t operator()(const std::pair<std::size_t, std::size_t>& p) const noexcept {
    return std::hash<std::size_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

struct Contingency {
  std::unordered_map<std::size_t, double> pred;
  std::unordered_map<std::size_t, double> gold;
  std::unordered_map<std::pair<std::size_t, std::size_t>, double, PairHash> joint;
};

Contingency count(std::span<const std::size_t> predicted, std::span<const std::size_t> gold) {
  if (predicted.size() != gold.size()) {
    throw PartitionMismatch("partitions cover different numbers of items");
  }
  Contingency c;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    c.pred[predicted[i]] += 1.0;
    c.gold[gold[i]] += 1.0;
    c.joint[{predicted[i], gold[i]}] += 1.0;
  }
  return c;
}

double pairs(double n) { return n * (n - 1.0) / 2.0; }

// Both maps must have the same keys; labels are mapped to dense ids.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> to_vectors(
    const std::map<std::string, std::string>& predicted,
    const std::map<std::string, std::string>& gold) {
  if (predicted.size() != gold.size()) throw PartitionMismatch("partitions cover different items");
  std::unordered_map<std::string, std::size_t> pid, gid;
  std::vector<std::size_t> p, g;
  auto it = gold.begin();
  for (const auto& [item, label] : predicted) {
    if (it->first != item) throw PartitionMismatch("item '" + item + "' missing from gold");
    p.push_back(pid.try_emplace(label, pid.size()).first->second);
    g.push_back(gid.try_emplace(it->second, gid.size()).first->second);
    ++it;
  }
  return {std::move(p), std::move(g)};
}

}  // namespace

nlohmann::json to_json(const Scores& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

Scores bcubed_f1(std::span<const std::size_t> predicted, std::span<const std::size_t> gold) {
  const auto c = count(predicted, gold);
  if (predicted.empty()) return {};
  double p = 0.0;
  double r = 0.0;
  for (const auto& [key, n] : c.joint) {
    p += n * n / c.pred.at(key.first);
    r += n * n / c.gold.at(key.second);
  }
  const double items = static_cast<double>(predicted.size());
  Scores s;
  s.precision = p / items;
  s.recall = r / items;
  s.f1 = harmonic(s.precision, s.recall);
  return s;
}

Scores pairwise_f1(std::span<const std::size_t> predicted, std::span<const std::size_t> gold) {
  const auto c = count(predicted, gold);
  double tp = 0.0;
  double pred_pairs = 0.0;
  double gold_pairs = 0.0;
  for (const auto& [key, n] : c.joint) tp += pairs(n);
  for (const auto& [key, n] : c.pred) pred_pairs += pairs(n);
  for (const auto& [key, n] : c.gold) gold_pairs += pairs(n);
  Scores s;
  s.precision = pred_pairs > 0.0 ? tp / pred_pairs : 1.0;
  s.recall = gold_pairs > 0.0 ? tp / gold_pairs : 1.0;
  s.f1 = harmonic(s.precision, s.recall);
  return s;
}

Scores bcubed_f1(const std::map<std::string, std::string>& predicted,
                 const std::map<std::string, std::string>& gold) {
  const auto [p, g] = to_vectors(predicted, gold);
  return bcubed_f1(p, g);
}

Scores pairwise_f1(const std::map<std::string, std::string>& predicted,
                   const std::map<std::string, std::string>& gold) {
  const auto [p, g] = to_vectors(predicted, gold);
  return pairwise_f1(p, g);
}

}  // namespace newsdesk::clustering
