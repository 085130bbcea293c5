#include "newsdesk/profiles/claims.hpp"

#include <fstream>
#include <set>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::profiles {

std::vector<Claim> parse_claims(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_object() && j.contains("claims") ? j.at("claims") : j;
  if (!list.is_array()) throw ConfigError("claims: expected an array");
  std::vector<Claim> out;
  std::set<ClaimId> seen;
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("claim_id") || !item.contains("text")) {
      throw ConfigError("claims: every entry needs claim_id and text");
    }
    Claim c;
    try {
      c.id = item.at("claim_id").get<std::string>();
      c.text = item.at("text").get<std::string>();
      c.topic_id = item.value("topic_id", std::string());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("claims: ") + e.what());
    }
    if (c.id.empty()) throw ConfigError("claims: empty claim_id");
    if (!seen.insert(c.id).second) throw ConfigError("claims: duplicate claim_id " + c.id);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Claim> load_claims(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open claims file " + path.string());
  try {
    return parse_claims(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("claims file " + path.string() + ": " + e.what());
  }
}

nlohmann::json to_json(const Claim& c) {
  return {{"claim_id", c.id}, {"text", c.text}, {"topic_id", c.topic_id}};
}

}  // namespace newsdesk::profiles
