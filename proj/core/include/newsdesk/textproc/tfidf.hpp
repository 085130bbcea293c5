#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/textproc/sparse_vector.hpp"
#include "newsdesk/textproc/tokenize.hpp"

namespace newsdesk::textproc {

/// Term index plus document frequencies of one fitted corpus. Indices are
/// dense in [0, size()) and assigned in lexicographic term order.
class Vocabulary {
 public:
  Vocabulary() = default;

  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t n_docs() const noexcept { return n_docs_; }
  bool fitted() const noexcept { return n_docs_ > 0; }

  std::optional<std::uint32_t> index_of(const std::string& term) const;
  const std::string& term(std::uint32_t index) const { return terms_.at(index); }
  std::size_t document_frequency(std::uint32_t index) const { return df_.at(index); }

  /// Smoothed inverse document frequency ln((1 + N) / (1 + df)).
  double idf(std::uint32_t index) const;

  nlohmann::json to_json() const;
  static Vocabulary from_json(const nlohmann::json& j);

  friend Vocabulary fit_vocabulary(std::span<const Tokens> docs, std::size_t min_df);

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> df_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t n_docs_ = 0;
};

/// Every term present in at least `min_df` documents gets an index. Throws
/// EmptyCorpus when `docs` is empty.
Vocabulary fit_vocabulary(std::span<const Tokens> docs, std::size_t min_df = 1);

/// tf(t) * ln((1 + N) / (1 + df(t))) over in-vocabulary terms, L2-normalized.
/// Terms with zero weight and out-of-vocabulary terms are dropped.
SparseVector tfidf(const Tokens& doc, const Vocabulary& vocab);

}  // namespace newsdesk::textproc
