#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "newsdesk/classifiers/maxent.hpp"
#include "newsdesk/model/article.hpp"

namespace newsdesk::classifiers {

struct MediumLabels {
  std::optional<Factuality> factuality;
  std::optional<BiasLabel> bias;

  friend bool operator==(const MediumLabels&, const MediumLabels&) = default;
};

/// Operator labels file: CSV `medium_id,factuality,bias` with a header row.
/// Either label may be empty.
std::map<MediumId, MediumLabels> parse_labels_csv(std::string_view content);
std::map<MediumId, MediumLabels> load_labels_csv(const std::filesystem::path& path);

/// Mean of the articles' propaganda feature vectors.
FeatureVector medium_feature_vector(std::span<const Article> articles);

/// Factuality and bias predicted from a medium's averaged article features.
class SourceClassifier {
 public:
  /// Trains whichever of the two models has at least two distinct labels
  /// among labeled media that have articles.
  static SourceClassifier train(const std::map<MediumId, MediumLabels>& labels,
                                const std::map<MediumId, std::vector<Article>>& articles,
                                const TrainConfig& config);

  bool has_factuality() const noexcept { return factuality_.fitted(); }
  bool has_bias() const noexcept { return bias_.fitted(); }

  MediumLabels predict(std::span<const Article> articles) const;

 private:
  LinearModel factuality_;
  LinearModel bias_;
};

}  // namespace newsdesk::classifiers
