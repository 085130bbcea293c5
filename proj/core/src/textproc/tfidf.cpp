#include "newsdesk/textproc/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::textproc {

std::optional<std::uint32_t> Vocabulary::index_of(const std::string& term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Vocabulary::idf(std::uint32_t index) const {
  return std::log((1.0 + static_cast<double>(n_docs_)) /
                  (1.0 + static_cast<double>(df_.at(index))));
}

nlohmann::json Vocabulary::to_json() const {
  return {{"n_docs", n_docs_}, {"terms", terms_}, {"document_frequency", df_}};
}

Vocabulary Vocabulary::from_json(const nlohmann::json& j) {
  Vocabulary v;
  v.n_docs_ = j.at("n_docs").get<std::size_t>();
  v.terms_ = j.at("terms").get<std::vector<std::string>>();
  v.df_ = j.at("document_frequency").get<std::vector<std::size_t>>();
  if (v.terms_.size() != v.df_.size()) throw ConfigError("vocabulary size mismatch");
  for (std::uint32_t i = 0; i < v.terms_.size(); ++i) {
    if (v.df_[i] > v.n_docs_) throw ConfigError("document frequency exceeds n_docs");
    v.index_.emplace(v.terms_[i], i);
  }
  return v;
}

Vocabulary fit_vocabulary(std::span<const Tokens> docs, std::size_t min_df) {
  if (docs.empty()) throw EmptyCorpus("cannot fit a vocabulary on zero documents");
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    std::set<std::string_view> seen(doc.begin(), doc.end());
    for (auto term : seen) ++df[std::string(term)];
  }
  Vocabulary v;
  v.n_docs_ = docs.size();
  for (auto& [term, count] : df) {
    if (count < std::max<std::size_t>(min_df, 1)) continue;
    const auto idx = static_cast<std::uint32_t>(v.terms_.size());
    v.terms_.push_back(term);
    v.df_.push_back(count);
    v.index_.emplace(term, idx);
  }
  return v;
}

SparseVector tfidf(const Tokens& doc, const Vocabulary& vocab) {
  std::map<std::uint32_t, std::size_t> tf;
  for (const auto& term : doc) {
    if (auto idx = vocab.index_of(term)) ++tf[*idx];
  }
  std::vector<SparseVector::Entry> entries;
  entries.reserve(tf.size());
  for (const auto& [idx, count] : tf) {
    const double w = static_cast<double>(count) * vocab.idf(idx);
    if (w != 0.0) entries.push_back({idx, w});
  }
  return SparseVector::from_unsorted(std::move(entries)).normalized();
}

}  // namespace newsdesk::textproc
