#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

#include "newsdesk/model/labels.hpp"
#include "newsdesk/textproc/tfidf.hpp"

namespace newsdesk::classifiers {

/// Stance of an article body towards a claim.
class StancePlugin {
 public:
  virtual ~StancePlugin() = default;
  virtual std::string name() const = 0;
  virtual StanceLabel classify(std::string_view article_body, std::string_view claim) const = 0;
};

struct StanceBaselineConfig {
  double unrelated_threshold = 0.05;  // IDF-weighted Jaccard
  double neutral_band = 0.1;          // |polarity| <= band -> discuss
};

/// Lexical baseline.
///
/// Overlap is the IDF-weighted Jaccard similarity between the claim's content
/// tokens and those of the best-matching body sentence; below the threshold
/// the article is unrelated. Otherwise polarity words in the claim-adjacent
/// sentences (sentences sharing a content token with the claim, plus their
/// neighbours) give a score (pos - neg) / (pos + neg + 1): above the neutral
/// band agree, below it disagree, inside it discuss. A negator up to two
/// words before a supporting word flips it. Words of the claim itself are
/// not counted.
class LexicalStanceBaseline final : public StancePlugin {
 public:
  explicit LexicalStanceBaseline(StanceBaselineConfig config = {},
                                 const textproc::Vocabulary* idf_source = nullptr);

  std::string name() const override { return "lexical-baseline"; }
  StanceLabel classify(std::string_view article_body, std::string_view claim) const override;

  double overlap(std::string_view article_body, std::string_view claim) const;
  double polarity(std::string_view article_body, std::string_view claim) const;

  const StanceBaselineConfig& config() const noexcept { return config_; }

 private:
  double term_weight(const std::string& term) const;

  StanceBaselineConfig config_;
  const textproc::Vocabulary* idf_source_;
  std::unordered_map<std::string, int> polarity_;
};

/// Routes to a registered plugin, falling back to the baseline.
class StanceClassifier {
 public:
  explicit StanceClassifier(StanceBaselineConfig config = {});

  void register_plugin(std::shared_ptr<const StancePlugin> plugin) { plugin_ = std::move(plugin); }
  void set_baseline_enabled(bool enabled) { baseline_enabled_ = enabled; }

  /// Throws NoStanceBackend when no plugin is registered and the baseline is
  /// disabled.
  StanceLabel classify(std::string_view article_body, std::string_view claim) const;

 private:
  std::shared_ptr<const StancePlugin> plugin_;
  LexicalStanceBaseline baseline_;
  bool baseline_enabled_ = true;
};

/// Delegates to `impl`; a null plugin throws NoStanceBackend.
StanceLabel classify_stance(std::string_view article_body, std::string_view claim,
                            const StancePlugin* impl);

/// Polarity lexicon: lemma -> +1 / -1.
std::unordered_map<std::string, int> parse_polarity_lexicon(std::string_view content);

}  // namespace newsdesk::classifiers
