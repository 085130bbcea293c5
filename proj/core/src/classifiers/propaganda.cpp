#include "newsdesk/classifiers/propaganda.hpp"

#include <algorithm>
#include <cmath>

#include "newsdesk/classifiers/section.hpp"
#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/hash.hpp"
#include "newsdesk/textproc/style.hpp"

namespace newsdesk::classifiers {

PropagandaLabel propaganda_label(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw RangeError("propaganda index must lie in [0, 1], got " + std::to_string(p));
  }
  if (p < 0.2) return PropagandaLabel::very_unlikely;
  if (p < 0.4) return PropagandaLabel::unlikely;
  if (p < 0.6) return PropagandaLabel::somehow;
  if (p < 0.8) return PropagandaLabel::likely;
  return PropagandaLabel::very_likely;
}

FeatureVector propaganda_features(std::string_view text) {
  const auto style = textproc::style_features(text);
  std::vector<FeatureVector::Entry> entries;
  const auto scalars = style.scaled_scalars();
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    entries.push_back({static_cast<std::uint32_t>(i), scalars[i]});
  }
  std::size_t total = 0;
  for (const auto& [gram, count] : style.char_ngram_counts) total += count;
  if (total > 0) {
    const double inv = 1.0 / static_cast<double>(total);
    for (const auto& [gram, count] : style.char_ngram_counts) {
      const auto bucket = fnv1a64(gram) & (kNgramBuckets - 1);
      entries.push_back({static_cast<std::uint32_t>(textproc::StyleFeatures::kScalarCount + bucket),
                         static_cast<double>(count) * inv});
    }
  }
  return FeatureVector::from_unsorted(std::move(entries));
}

FeatureSpace propaganda_feature_space() {
  return {"style+hashed-char-ngrams",
          kPropagandaDimension,
          {{"scalars",
            {"type_token_ratio", "hapax_ratio", "avg_sentence_length/50", "avg_word_length/10",
             "flesch_reading_ease/100", "long_word_ratio"}},
           {"ngram_orders", {2, 3}},
           {"hash", "fnv1a64"},
           {"hash_bits", kNgramHashBits},
           {"ngram_value", "relative_frequency"}}};
}

PropagandaScorer::PropagandaScorer(LinearModel model) : model_(std::move(model)) {
  if (model_.fitted()) {
    if (model_.dimension() != kPropagandaDimension) {
      throw ShapeError("propaganda model has the wrong feature dimension");
    }
    positive_ = model_.class_index(std::string(kPropagandistic));
  }
}

PropagandaScorer PropagandaScorer::train(std::span<const PropagandaExample> examples,
                                         const TrainConfig& config) {
  std::vector<LabeledSample> samples;
  samples.reserve(examples.size());
  for (const auto& e : examples) {
    samples.push_back({propaganda_features(e.text),
                       std::string(e.propagandistic ? kPropagandistic : kNonPropagandistic)});
  }
  return PropagandaScorer(train_maxent(
      samples, propaganda_feature_space(), config,
      {std::string(kNonPropagandistic), std::string(kPropagandistic)}));
}

PropagandaResult PropagandaScorer::score(std::string_view text) const {
  if (!fitted()) throw NotFitted("propaganda model has not been trained");
  const double p = std::clamp(model_.predict_proba(propaganda_features(text))[positive_], 0.0, 1.0);
  return {p, propaganda_label(p)};
}

PropagandaResult PropagandaScorer::score(const Article& article) const {
  return score(article_text(article));
}

}  // namespace newsdesk::classifiers
