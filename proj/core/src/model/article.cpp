#include "newsdesk/model/article.hpp"

#include <cmath>

#include "newsdesk/common/hash.hpp"

namespace newsdesk {

ArticleId article_id_for(std::string_view canonical_url) {
  return to_hex64(fnv1a64(canonical_url));
}

void validate(const Article& article) {
  if (article.canonical_url.empty()) throw InvariantViolation("article has no canonical_url");
  if (article.id != article_id_for(article.canonical_url)) {
    throw InvariantViolation("article id does not match canonical_url: " + article.id);
  }
  if (article.body.empty()) throw InvariantViolation("article body is empty: " + article.id);
  if (article.frame_distribution) {
    double sum = 0.0;
    for (const auto& [frame, p] : *article.frame_distribution) {
      if (p < 0.0 || p > 1.0) throw InvariantViolation("frame probability out of range");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw InvariantViolation("frame distribution does not sum to 1: " + article.id);
    }
  }
  if (article.propaganda) {
    const double p = article.propaganda->index;
    if (!(p >= 0.0 && p <= 1.0)) throw InvariantViolation("propaganda index out of range");
  }
}

nlohmann::json to_json(const Article& article) {
  nlohmann::json j = to_json_without_timestamps(article);
  j["fetched_at"] = format_iso8601(article.fetched_at);
  return j;
}

nlohmann::json to_json_without_timestamps(const Article& a) {
  nlohmann::json j;
  j["id"] = a.id;
  j["canonical_url"] = a.canonical_url;
  j["medium_id"] = a.medium_id;
  j["title"] = a.title;
  j["body"] = a.body;
  j["language"] = std::string(to_string(a.language));
  j["published_at"] = format_iso8601(a.published_at);
  j["section"] = a.section ? nlohmann::json(std::string(to_string(*a.section))) : nlohmann::json();
  if (a.propaganda) {
    j["propaganda"] = {{"index", a.propaganda->index},
                       {"label", std::string(to_string(a.propaganda->label))}};
  } else {
    j["propaganda"] = nullptr;
  }
  nlohmann::json stances = nlohmann::json::object();
  for (const auto& [claim, label] : a.stances) stances[claim] = std::string(to_string(label));
  j["stances"] = std::move(stances);
  if (a.frame_distribution) {
    nlohmann::json frames = nlohmann::json::object();
    for (const auto& [frame, p] : *a.frame_distribution) frames[std::string(to_string(frame))] = p;
    j["frame_distribution"] = std::move(frames);
  } else {
    j["frame_distribution"] = nullptr;
  }
  return j;
}

Article article_from_json(const nlohmann::json& j) {
  Article a;
  a.id = j.at("id").get<std::string>();
  a.canonical_url = j.at("canonical_url").get<std::string>();
  a.medium_id = j.value("medium_id", "");
  a.title = j.value("title", "");
  a.body = j.at("body").get<std::string>();
  a.language = parse_enum<Language>(j.value("language", "en"));
  auto ts = [&](const char* key) -> Timestamp {
    if (!j.contains(key) || j[key].is_null()) return Timestamp{};
    const auto& v = j[key];
    if (v.is_number_integer()) return from_unix(v.get<std::int64_t>());
    auto parsed = parse_any_date(v.get<std::string>());
    if (!parsed) throw ConfigError(std::string("bad timestamp in field ") + key);
    return *parsed;
  };
  a.published_at = ts("published_at");
  a.fetched_at = j.contains("fetched_at") ? ts("fetched_at") : a.published_at;
  if (j.contains("section") && !j["section"].is_null()) {
    a.section = parse_enum<SectionLabel>(j["section"].get<std::string>());
  }
  if (j.contains("propaganda") && !j["propaganda"].is_null()) {
    const auto& p = j["propaganda"];
    a.propaganda = PropagandaResult{p.at("index").get<double>(),
                                    parse_enum<PropagandaLabel>(p.at("label").get<std::string>())};
  }
  if (j.contains("stances") && j["stances"].is_object()) {
    for (const auto& [claim, label] : j["stances"].items()) {
      a.stances[claim] = parse_enum<StanceLabel>(label.get<std::string>());
    }
  }
  if (j.contains("frame_distribution") && j["frame_distribution"].is_object()) {
    FrameDistribution frames;
    for (const auto& [frame, p] : j["frame_distribution"].items()) {
      frames[parse_enum<FrameLabel>(frame)] = p.get<double>();
    }
    a.frame_distribution = std::move(frames);
  }
  return a;
}

}  // namespace newsdesk
