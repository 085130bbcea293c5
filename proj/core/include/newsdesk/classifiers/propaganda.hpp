#pragma once

#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "newsdesk/classifiers/maxent.hpp"
#include "newsdesk/model/article.hpp"

namespace newsdesk::classifiers {

/// Bucket of a propaganda index: [0,0.2) very_unlikely, [0.2,0.4) unlikely,
/// [0.4,0.6) somehow, [0.6,0.8) likely, [0.8,1] very_likely. Throws
/// RangeError outside [0, 1] (and for NaN).
PropagandaLabel propaganda_label(double p);

inline constexpr std::size_t kNgramHashBits = 18;
inline constexpr std::size_t kNgramBuckets = std::size_t{1} << kNgramHashBits;

/// Style scalars in [0, 6) followed by hashed character 2- and 3-gram
/// relative frequencies in [6, 6 + 2^18).
inline constexpr std::size_t kPropagandaDimension = 6 + kNgramBuckets;

FeatureVector propaganda_features(std::string_view text);
FeatureSpace propaganda_feature_space();

struct PropagandaExample {
  std::string text;
  bool propagandistic = false;
};

inline constexpr std::string_view kNonPropagandistic = "non_propagandistic";
inline constexpr std::string_view kPropagandistic = "propagandistic";

/// Binary maxent model; the propaganda index is the probability of the
/// propagandistic class.
class PropagandaScorer {
 public:
  PropagandaScorer() = default;
  explicit PropagandaScorer(LinearModel model);

  static PropagandaScorer train(std::span<const PropagandaExample> examples,
                                const TrainConfig& config);

  bool fitted() const noexcept { return model_.fitted(); }
  const LinearModel& model() const noexcept { return model_; }

  /// Throws NotFitted.
  PropagandaResult score(std::string_view text) const;
  PropagandaResult score(const Article& article) const;

 private:
  LinearModel model_;
  std::size_t positive_ = 1;
};

}  // namespace newsdesk::classifiers
