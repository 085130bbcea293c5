#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/classifiers/source_classifier.hpp"
#include "newsdesk/ingest/sources.hpp"
#include "newsdesk/profiles/claims.hpp"
#include "newsdesk/profiles/valence.hpp"

namespace newsdesk::profiles {

struct StanceSummary {
  /// Fractions over agree/disagree/discuss articles only.
  std::map<StanceLabel, double> distribution;
  std::size_t related = 0;
  std::size_t unrelated = 0;
  double coverage = 0.0;  // 1 - unrelated / (related + unrelated)

  friend bool operator==(const StanceSummary&, const StanceSummary&) = default;
};

enum class LabelSource { none, labels_file, classifier };

struct MediaProfile {
  MediumId medium_id;
  std::string name;
  std::string country;
  std::size_t article_count = 0;
  /// Labels that occur, as fractions of the articles with a propaganda score.
  std::map<PropagandaLabel, double> propaganda_distribution;
  /// Mean of the articles' frame distributions.
  std::map<FrameLabel, double> frame_distribution;
  std::map<ClaimId, StanceSummary> stance_by_claim;
  std::optional<Factuality> factuality;
  std::optional<BiasLabel> bias;
  LabelSource label_source = LabelSource::none;
  std::vector<ValenceRecord> valences;
  std::optional<nlohmann::json> audience;

  /// Distance of the bias label from center on the 7-point scale (0..3).
  std::optional<int> hyper_partisanship() const;

  friend bool operator==(const MediaProfile&, const MediaProfile&) = default;
};

nlohmann::json to_json(const MediaProfile& p);

struct ProfileInputs {
  const ingest::SourceRegistry* registry = nullptr;
  std::span<const Article> articles;  // any media; filtered by id
  std::span<const Claim> claims;      // empty: keep every claim id seen
  std::span<const GroupCitationCounts> citations;
  const std::map<MediumId, classifiers::MediumLabels>* labels = nullptr;
  const classifiers::SourceClassifier* classifier = nullptr;
  ValenceConfig valence;
};

/// Aggregates one medium. Labels from the labels file win over the
/// classifier, per field. Throws NotFound when the medium is neither in the
/// registry nor the medium of any article.
MediaProfile build_media_profile(const MediumId& medium_id, const ProfileInputs& inputs);

}  // namespace newsdesk::profiles
