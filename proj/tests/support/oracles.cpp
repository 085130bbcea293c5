#include "support/oracles.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace newsdesk::testing {

std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> max_prefix(n, 0);  // max of a[0..i-1]
  while (true) {
    out.push_back(a);
    // Find the rightmost position that can be incremented.
    std::size_t i = n - 1;
    while (i > 0) {
      std::size_t m = 0;
      for (std::size_t j = 0; j < i; ++j) m = std::max(m, a[j]);
      if (a[i] <= m) break;
      --i;
    }
    if (i == 0) break;
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) a[j] = 0;
  }
  return out;
}

clustering::Scores bcubed_oracle(const std::vector<std::size_t>& predicted,
                                 const std::vector<std::size_t>& gold) {
  const std::size_t n = predicted.size();
  clustering::Scores s;
  if (n == 0) return s;
  double p = 0.0;
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double both = 0, in_pred = 0, in_gold = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const bool sp = predicted[j] == predicted[i];
      const bool sg = gold[j] == gold[i];
      both += sp && sg;
      in_pred += sp;
      in_gold += sg;
    }
    p += both / in_pred;
    r += both / in_gold;
  }
  s.precision = p / static_cast<double>(n);
  s.recall = r / static_cast<double>(n);
  s.f1 = 2 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

clustering::Scores pairwise_oracle(const std::vector<std::size_t>& predicted,
                                   const std::vector<std::size_t>& gold) {
  double tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    for (std::size_t j = i + 1; j < predicted.size(); ++j) {
      const bool sp = predicted[i] == predicted[j];
      const bool sg = gold[i] == gold[j];
      tp += sp && sg;
      fp += sp && !sg;
      fn += !sp && sg;
    }
  }
  clustering::Scores s;
  s.precision = tp + fp > 0 ? tp / (tp + fp) : 1.0;
  s.recall = tp + fn > 0 ? tp / (tp + fn) : 1.0;
  s.f1 = s.precision + s.recall > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  return s;
}

double modularity_oracle(const clustering::SimilarityGraph& g, const std::vector<std::size_t>& c) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    a[e.u][e.v] += e.weight;
    a[e.v][e.u] += e.weight;
  }
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
    two_m += k[i];
  }
  if (two_m == 0.0) return 0.0;
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i] == c[j]) q += a[i][j] - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

ExhaustiveOptimum best_modularity(const clustering::SimilarityGraph& g) {
  ExhaustiveOptimum best{-1.0, {}};
  for (const auto& p : all_partitions(g.node_count())) {
    const double q = modularity_oracle(g, p);
    if (q > best.modularity) best = {q, p};
  }
  return best;
}

double macro_f1(const std::vector<std::size_t>& truth, const std::vector<std::size_t>& predicted,
                std::size_t classes) {
  double sum = 0.0;
  for (std::size_t c = 0; c < classes; ++c) {
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      if (predicted[i] == c && truth[i] == c) ++tp;
      if (predicted[i] == c && truth[i] != c) ++fp;
      if (predicted[i] != c && truth[i] == c) ++fn;
    }
    sum += tp + fp + fn == 0 ? 1.0 : 2 * tp / (2 * tp + fp + fn);
  }
  return sum / static_cast<double>(classes);
}

double valence_oracle(std::uint64_t tf_c0, std::uint64_t total_c0, std::uint64_t tf_c1,
                      std::uint64_t total_c1) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  const cpp_rational r0{cpp_int{tf_c0}, cpp_int{total_c0}};
  const cpp_rational r1{cpp_int{tf_c1}, cpp_int{total_c1}};
  const cpp_rational v = 2 * r0 / (r0 + r1) - 1;
  return v.convert_to<double>();
}

}  // namespace newsdesk::testing
