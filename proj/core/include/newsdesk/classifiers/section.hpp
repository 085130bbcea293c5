#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/classifiers/maxent.hpp"
#include "newsdesk/model/article.hpp"
#include "newsdesk/textproc/tfidf.hpp"

namespace newsdesk::classifiers {

struct SectionExample {
  std::string text;  // title and body
  Language language = Language::en;
  SectionLabel label = SectionLabel::politics;
};

/// Maxent model over TF-IDF vectors of title + body, with the six section
/// labels as classes in their fixed order.
class SectionClassifier {
 public:
  SectionClassifier() = default;
  SectionClassifier(textproc::Vocabulary vocab, LinearModel model);

  /// Throws DegenerateLabels when fewer than two sections are present.
  static SectionClassifier train(std::span<const SectionExample> examples,
                                 const TrainConfig& config, std::size_t min_df = 1);

  bool fitted() const noexcept { return model_.fitted(); }
  const LinearModel& model() const noexcept { return model_; }
  const textproc::Vocabulary& vocabulary() const noexcept { return vocab_; }

  FeatureVector features(std::string_view text, Language language) const;

  /// Argmax of predict_proba; ties resolve to the earlier label in
  /// entertainment, sports, business, technology, politics, health order. An
  /// empty text is classified from the bias vector alone. Throws NotFitted.
  SectionLabel categorize(std::string_view text, Language language) const;
  SectionLabel categorize(const Article& article) const;

  nlohmann::json to_json() const;
  static SectionClassifier from_json(const nlohmann::json& j);

 private:
  textproc::Vocabulary vocab_;
  LinearModel model_;
};

/// Model text for an article: title, blank line, body.
std::string article_text(const Article& article);

}  // namespace newsdesk::classifiers
