#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "newsdesk/common/time.hpp"
#include "newsdesk/model/labels.hpp"

namespace newsdesk {

using ArticleId = std::string;
using MediumId = std::string;
using ClaimId = std::string;

using FrameDistribution = std::map<FrameLabel, double>;

struct Article {
  ArticleId id;
  std::string canonical_url;
  MediumId medium_id;
  std::string title;
  std::string body;
  Language language = Language::en;
  Timestamp published_at{};
  Timestamp fetched_at{};

  std::optional<SectionLabel> section;
  std::optional<PropagandaResult> propaganda;
  std::map<ClaimId, StanceLabel> stances;
  std::optional<FrameDistribution> frame_distribution;

  friend bool operator==(const Article&, const Article&) = default;
};

/// Stable id for a canonical URL: hex FNV-1a.
ArticleId article_id_for(std::string_view canonical_url);

/// Throws InvariantViolation when the article breaks a type invariant: id not
/// derived from canonical_url, empty body, or a frame distribution that does
/// not sum to 1 within 1e-9.
void validate(const Article& article);

nlohmann::json to_json(const Article& article);
Article article_from_json(const nlohmann::json& j);

/// Same as to_json without fetched_at, which differs between otherwise
/// identical runs.
nlohmann::json to_json_without_timestamps(const Article& article);

}  // namespace newsdesk
