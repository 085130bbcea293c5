#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/model/article.hpp"

namespace newsdesk::profiles {

struct Claim {
  ClaimId id;
  std::string text;
  std::string topic_id;

  friend bool operator==(const Claim&, const Claim&) = default;
};

/// Either a JSON array of {claim_id, text, topic_id} or {"claims": [...]}.
/// Throws ConfigError on missing fields or duplicate ids.
std::vector<Claim> parse_claims(const nlohmann::json& j);
std::vector<Claim> load_claims(const std::filesystem::path& path);
nlohmann::json to_json(const Claim& c);

}  // namespace newsdesk::profiles
