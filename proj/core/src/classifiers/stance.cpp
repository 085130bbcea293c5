#include "newsdesk/classifiers/stance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/textproc/lexicon.hpp"
#include "newsdesk/textproc/tokenize.hpp"

namespace newsdesk::classifiers {

namespace {

bool is_negator(const std::string& w) { return w == "not" || w == "no" || w == "never"; }

std::set<std::string> content_set(std::string_view text) {
  auto toks = textproc::preprocess(text, Language::en);
  return {toks.begin(), toks.end()};
}

std::vector<std::string> raw_lemmas(std::string_view text) {
  std::vector<std::string> out;
  for (auto& w : textproc::words(text)) out.push_back(textproc::lemmatize_en(w));
  return out;
}

}  // namespace

std::unordered_map<std::string, int> parse_polarity_lexicon(std::string_view content) {
  std::unordered_map<std::string, int> out;
  for (const auto& [word, sign] : textproc::parse_lemma_table(content)) {
    const int s = sign.rfind('-', 0) == 0 ? -1 : 1;
    out[word] = s;
    out[textproc::lemmatize_en(word)] = s;
  }
  return out;
}

LexicalStanceBaseline::LexicalStanceBaseline(StanceBaselineConfig config,
                                             const textproc::Vocabulary* idf_source)
    : config_(config),
      idf_source_(idf_source),
      polarity_(parse_polarity_lexicon(textproc::builtin_polarity_lexicon())) {}

double LexicalStanceBaseline::term_weight(const std::string& term) const {
  if (!idf_source_ || !idf_source_->fitted()) return 1.0;
  if (auto idx = idf_source_->index_of(term)) return std::max(idf_source_->idf(*idx), 1e-6);
  return std::log(1.0 + static_cast<double>(idf_source_->n_docs()));
}

double LexicalStanceBaseline::overlap(std::string_view body, std::string_view claim) const {
  const auto c = content_set(claim);
  if (c.empty()) return 0.0;
  double best = 0.0;
  for (const auto& sentence : textproc::sentences(body)) {
    const auto s = content_set(sentence);
    double inter = 0.0;
    double uni = 0.0;
    for (const auto& t : c) {
      const double w = term_weight(t);
      uni += w;
      if (s.count(t)) inter += w;
    }
    for (const auto& t : s) {
      if (!c.count(t)) uni += term_weight(t);
    }
    if (uni > 0.0) best = std::max(best, inter / uni);
  }
  return best;
}

double LexicalStanceBaseline::polarity(std::string_view body, std::string_view claim) const {
  const auto c = content_set(claim);
  const auto claim_words_vec = raw_lemmas(claim);
  const std::set<std::string> claim_words(claim_words_vec.begin(), claim_words_vec.end());
  const auto sents = textproc::sentences(body);

  std::vector<bool> adjacent(sents.size(), false);
  for (std::size_t i = 0; i < sents.size(); ++i) {
    const auto s = content_set(sents[i]);
    const bool shares = std::any_of(s.begin(), s.end(), [&](const auto& t) { return c.count(t); });
    if (!shares) continue;
    adjacent[i] = true;
    if (i > 0) adjacent[i - 1] = true;
    if (i + 1 < sents.size()) adjacent[i + 1] = true;
  }

  int pos = 0;
  int neg = 0;
  for (std::size_t i = 0; i < sents.size(); ++i) {
    if (!adjacent[i]) continue;
    const auto toks = raw_lemmas(sents[i]);
    int window = 0;            // tokens left in which a negator applies
    bool negator_open = false;  // a negator not yet attached to a word
    for (const auto& t : toks) {
      if (window > 0 && --window == 0 && negator_open) {
        ++neg;
        negator_open = false;
      }
      if (claim_words.count(t)) continue;
      if (is_negator(t)) {
        if (negator_open) ++neg;
        negator_open = true;
        window = 3;
        continue;
      }
      auto it = polarity_.find(t);
      if (it == polarity_.end()) continue;
      if (it->second > 0 && negator_open) {
        ++neg;
        negator_open = false;
        window = 0;
      } else if (it->second > 0) {
        ++pos;
      } else {
        ++neg;
      }
    }
    if (negator_open) ++neg;
  }
  return static_cast<double>(pos - neg) / static_cast<double>(pos + neg + 1);
}

StanceLabel LexicalStanceBaseline::classify(std::string_view body, std::string_view claim) const {
  if (overlap(body, claim) < config_.unrelated_threshold) return StanceLabel::unrelated;
  const double p = polarity(body, claim);
  if (p > config_.neutral_band) return StanceLabel::agree;
  if (p < -config_.neutral_band) return StanceLabel::disagree;
  return StanceLabel::discuss;
}

StanceClassifier::StanceClassifier(StanceBaselineConfig config) : baseline_(config) {}

StanceLabel StanceClassifier::classify(std::string_view body, std::string_view claim) const {
  if (plugin_) return plugin_->classify(body, claim);
  if (!baseline_enabled_) throw NoStanceBackend("no stance plugin registered and baseline disabled");
  return baseline_.classify(body, claim);
}

StanceLabel classify_stance(std::string_view body, std::string_view claim,
                            const StancePlugin* impl) {
  if (!impl) throw NoStanceBackend("no stance plugin given");
  return impl->classify(body, claim);
}

}  // namespace newsdesk::classifiers
