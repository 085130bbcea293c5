#include "newsdesk/classifiers/section.hpp"

#include "newsdesk/common/errors.hpp"

namespace newsdesk::classifiers {

namespace {

std::vector<std::string> section_classes() {
  std::vector<std::string> out;
  for (auto s : all_values<SectionLabel>()) out.emplace_back(to_string(s));
  return out;
}

}  // namespace

std::string article_text(const Article& article) {
  return article.title + "\n\n" + article.body;
}

SectionClassifier::SectionClassifier(textproc::Vocabulary vocab, LinearModel model)
    : vocab_(std::move(vocab)), model_(std::move(model)) {
  if (model_.fitted() && model_.classes() != section_classes()) {
    throw ConfigError("section model classes must be the six sections in canonical order");
  }
  if (model_.fitted() && model_.dimension() != vocab_.size()) {
    throw ShapeError("section model dimension does not match its vocabulary");
  }
}

SectionClassifier SectionClassifier::train(std::span<const SectionExample> examples,
                                           const TrainConfig& config, std::size_t min_df) {
  std::vector<textproc::Tokens> docs;
  docs.reserve(examples.size());
  for (const auto& e : examples) docs.push_back(textproc::preprocess(e.text, e.language));
  if (docs.empty()) throw DegenerateLabels("no training examples");
  auto vocab = textproc::fit_vocabulary(docs, min_df);

  std::vector<LabeledSample> samples;
  samples.reserve(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    samples.push_back({textproc::tfidf(docs[i], vocab), std::string(to_string(examples[i].label))});
  }
  FeatureSpace space{"tfidf", vocab.size(), nlohmann::json::object()};
  auto model = train_maxent(samples, std::move(space), config, section_classes());
  return SectionClassifier(std::move(vocab), std::move(model));
}

FeatureVector SectionClassifier::features(std::string_view text, Language language) const {
  return textproc::tfidf(textproc::preprocess(text, language), vocab_);
}

SectionLabel SectionClassifier::categorize(std::string_view text, Language language) const {
  if (!fitted()) throw NotFitted("section classifier has not been trained");
  const auto p = model_.predict_proba(features(text, language));
  std::size_t best = 0;
  for (std::size_t c = 1; c < p.size(); ++c) {
    if (p[c] > p[best]) best = c;
  }
  return from_index<SectionLabel>(best);
}

SectionLabel SectionClassifier::categorize(const Article& article) const {
  return categorize(article_text(article), article.language);
}

nlohmann::json SectionClassifier::to_json() const {
  return {{"vocabulary", vocab_.to_json()}, {"model", model_.to_json()}};
}

SectionClassifier SectionClassifier::from_json(const nlohmann::json& j) {
  return SectionClassifier(textproc::Vocabulary::from_json(j.at("vocabulary")),
                           LinearModel::from_json(j.at("model")));
}

}  // namespace newsdesk::classifiers
