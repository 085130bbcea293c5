#include "newsdesk/api/service.hpp"

#include <algorithm>
#include <charconv>

#include <spdlog/spdlog.h>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/utf8.hpp"

namespace newsdesk::api {

using nlohmann::json;
using profiles::AnalyticsSnapshot;

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::bad_request: return "bad_request";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

ApiResponse error_response(int status, ErrorCode code, std::string message) {
  return {status, json{{"error", {{"code", std::string(to_string(code))}, {"message", message}}}}};
}

namespace {

ApiResponse bad_request(std::string message) {
  return error_response(400, ErrorCode::bad_request, std::move(message));
}

ApiResponse not_found(std::string message) {
  return error_response(404, ErrorCode::not_found, std::move(message));
}

json medium_ref(const AnalyticsSnapshot& s, const MediumId& id) {
  const auto* m = s.registry ? s.registry->find_medium(id) : nullptr;
  return {{"id", id}, {"name", m ? m->name : id}, {"logo_url", m ? m->logo_url : ""}};
}

// Newest first; ties by id so the order is total.
bool newer(const Article* a, const Article* b) {
  if (a->published_at != b->published_at) return a->published_at > b->published_at;
  return a->id < b->id;
}

std::vector<const Article*> story_articles(const AnalyticsSnapshot& s,
                                           const clustering::Story& story) {
  std::vector<const Article*> out;
  out.reserve(story.article_ids.size());
  for (const auto& id : story.article_ids) {
    if (const auto* a = s.find_article(id)) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), newer);
  return out;
}

// Strict positive integer; nullopt for anything else.
std::optional<std::size_t> positive_int(const std::string& text) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || v == 0) return std::nullopt;
  return v;
}

struct Match {
  int rank = 3;  // 0 exact, 1 prefix, 2 substring
  std::size_t position = 0;
};

Match match(const std::string& needle, const std::string& haystack) {
  const auto h = utf8::casefold(haystack);
  if (h == needle) return {0, 0};
  const auto pos = h.find(needle);
  if (pos == std::string::npos) return {};
  return {pos == 0 ? 1 : 2, pos};
}

Match best(Match a, Match b) {
  if (a.rank != b.rank) return a.rank < b.rank ? a : b;
  return a.position <= b.position ? a : b;
}

constexpr std::string_view kMatchNames[] = {"exact", "prefix", "substring"};

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    const auto j = path.find('/', i);
    const auto end = j == std::string_view::npos ? path.size() : j;
    parts.emplace_back(path.substr(i, end - i));
    i = end;
  }
  return parts;
}

}  // namespace

json article_entry(const AnalyticsSnapshot& s, const Article& a) {
  return {{"article_id", a.id},
          {"title", a.title},
          {"medium", medium_ref(s, a.medium_id)},
          {"published_at", format_iso8601(a.published_at)},
          {"propaganda_label",
           a.propaganda ? json(std::string(to_string(a.propaganda->label))) : json(nullptr)},
          {"section", a.section ? json(std::string(to_string(*a.section))) : json(nullptr)},
          {"language", std::string(to_string(a.language))}};
}

json story_card(const AnalyticsSnapshot& s, const clustering::Story& story) {
  const auto articles = story_articles(s, story);
  json items = json::array();
  for (const auto* a : articles) items.push_back(article_entry(s, *a));
  return {{"story_id", story.id},
          {"slug", story.slug},
          {"title", story.title},
          {"articles", items},
          {"updated_at",
           articles.empty() ? json(nullptr) : json(format_iso8601(articles.front()->published_at))}};
}

ApiResponse ApiService::handle(std::string_view method, std::string_view path,
                               const Query& query) const {
  try {
    const auto parts = split_path(path);
    if (parts.empty() || parts[0] != "v1" || parts.size() < 2 || parts.size() > 3) {
      return not_found("no such endpoint: " + std::string(path));
    }
    const auto& resource = parts[1];
    const bool collection = parts.size() == 2;
    const bool known = (collection && (resource == "stories" || resource == "search")) ||
                       (!collection && (resource == "media" || resource == "topics" ||
                                        resource == "articles"));
    if (!known) return not_found("no such endpoint: " + std::string(path));
    if (method != "GET" && method != "HEAD") {
      return error_response(405, ErrorCode::bad_request,
                            "method " + std::string(method) + " not allowed");
    }
    const auto snapshot = snapshots_.current();
    const auto& s = *snapshot;
    if (resource == "stories") return stories(s, query);
    if (resource == "search") return search(s, query);
    if (resource == "media") return medium(s, parts[2]);
    if (resource == "topics") return topic(s, parts[2]);
    return article(s, parts[2]);
  } catch (const std::exception& e) {
    spdlog::error("api {} {}: {}", method, path, e.what());
    return error_response(500, ErrorCode::internal, "internal error");
  }
}

ApiResponse ApiService::stories(const AnalyticsSnapshot& s, const Query& q) const {
  std::string lang = "en";
  if (auto it = q.find("lang"); it != q.end()) lang = it->second;
  if (!try_parse<Language>(lang)) return bad_request("lang must be one of en, ar");
  std::size_t page = 1;
  std::size_t page_size = kDefaultPageSize;
  if (auto it = q.find("page"); it != q.end()) {
    auto v = positive_int(it->second);
    if (!v) return bad_request("page must be a positive integer");
    page = *v;
  }
  if (auto it = q.find("page_size"); it != q.end()) {
    auto v = positive_int(it->second);
    if (!v) return bad_request("page_size must be a positive integer");
    page_size = std::min(*v, kMaxPageSize);
  }

  struct Entry {
    const clustering::Story* story;
    Timestamp updated;
  };
  std::vector<Entry> entries;
  for (const auto& story : s.clustering.stories) {
    Timestamp updated{};
    bool any = false;
    for (const auto& id : story.article_ids) {
      if (const auto* a = s.find_article(id)) {
        updated = any ? std::max(updated, a->published_at) : a->published_at;
        any = true;
      }
    }
    if (any) entries.push_back({&story, updated});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.updated != b.updated) return a.updated > b.updated;
    return a.story->id < b.story->id;
  });

  json items = json::array();
  const std::size_t first = (page - 1) * page_size;
  if (page - 1 <= entries.size() / page_size) {  // also keeps `first` from overflowing
    for (std::size_t i = first; i < entries.size() && i < first + page_size; ++i) {
      items.push_back(story_card(s, *entries[i].story));
    }
  }
  return {200, json{{"items", items},
                    {"total", entries.size()},
                    {"page", page},
                    {"page_size", page_size},
                    {"lang", lang}}};
}

ApiResponse ApiService::medium(const AnalyticsSnapshot& s, const std::string& id) const {
  auto it = s.profiles.find(id);
  if (it == s.profiles.end()) return not_found("unknown medium '" + id + "'");
  json medium = medium_ref(s, id);
  const auto* src = s.registry ? s.registry->find_medium(id) : nullptr;
  medium["country"] = it->second.country;
  medium["homepage"] = src ? src->homepage : "";

  std::vector<const Article*> articles;
  for (const auto& a : s.articles) {
    if (a.medium_id == id) articles.push_back(&a);
  }
  std::sort(articles.begin(), articles.end(), newer);
  json recent = json::array();
  for (std::size_t i = 0; i < articles.size() && i < kRecentArticles; ++i) {
    recent.push_back(article_entry(s, *articles[i]));
  }
  return {200, json{{"medium", medium}, {"profile", to_json(it->second)}, {"recent_articles", recent}}};
}

ApiResponse ApiService::topic(const AnalyticsSnapshot& s, const std::string& slug) const {
  const auto* story = s.clustering.find_story(slug);
  if (!story) return not_found("unknown topic '" + slug + "'");
  auto st = s.topics.find(story->id);
  if (st == s.topics.end()) return not_found("unknown topic '" + slug + "'");
  const auto& stats = st->second;

  std::vector<std::pair<std::string, profiles::CountryCoverage>> countries(stats.countries.begin(),
                                                                           stats.countries.end());
  auto ranked_countries = [&](auto key) {
    auto c = countries;
    std::stable_sort(c.begin(), c.end(),
                     [&](const auto& a, const auto& b) { return key(a.second) > key(b.second); });
    json out = json::array();
    for (const auto& [code, v] : c) {
      out.push_back({{"country", code}, {"articles", v.articles}, {"ratio", v.ratio}});
    }
    return out;
  };
  std::vector<std::pair<MediumId, profiles::MediumCoverage>> media(stats.media.begin(),
                                                                   stats.media.end());
  auto ranked_media = [&](auto key) {
    auto m = media;
    std::stable_sort(m.begin(), m.end(),
                     [&](const auto& a, const auto& b) { return key(a.second) > key(b.second); });
    json out = json::array();
    for (const auto& [id, v] : m) {
      if (v.propagandistic_articles == 0) continue;
      out.push_back({{"medium", medium_ref(s, id)},
                     {"articles", v.articles},
                     {"propagandistic_articles", v.propagandistic_articles},
                     {"propagandistic_ratio", v.propagandistic_ratio}});
    }
    return out;
  };

  std::vector<const clustering::Topic*> segments;
  for (const auto& t : s.clustering.topics) {
    if (std::find(story->topic_ids.begin(), story->topic_ids.end(), t.id) != story->topic_ids.end()) {
      segments.push_back(&t);
    }
  }
  std::sort(segments.begin(), segments.end(), [](const auto* a, const auto* b) {
    if (a->end != b->end) return a->end > b->end;
    return a->id < b->id;
  });
  json timeline = json::array();
  for (const auto* t : segments) {
    timeline.push_back({{"topic_id", t->id},
                        {"start", format_iso8601(t->start)},
                        {"end", format_iso8601(t->end)},
                        {"article_count", t->article_ids.size()}});
  }

  json card = story_card(s, *story);
  json recent = json::array();
  for (std::size_t i = 0; i < card["articles"].size() && i < kRecentArticles; ++i) {
    recent.push_back(card["articles"][i]);
  }
  return {200,
          json{{"topic", to_json(stats)},
               {"story_id", story->id},
               {"updated_at", card["updated_at"]},
               {"top_countries",
                {{"by_articles", ranked_countries([](const auto& v) { return double(v.articles); })},
                 {"by_ratio", ranked_countries([](const auto& v) { return v.ratio; })}}},
               {"most_propagandistic_media",
                {{"by_articles",
                  ranked_media([](const auto& v) { return double(v.propagandistic_articles); })},
                 {"by_ratio", ranked_media([](const auto& v) { return v.propagandistic_ratio; })}}},
               {"recent_articles", recent},
               {"timeline", timeline}}};
}

ApiResponse ApiService::search(const AnalyticsSnapshot& s, const Query& q) const {
  auto qit = q.find("q");
  const std::string needle = qit == q.end() ? "" : utf8::casefold(utf8::collapse_whitespace(qit->second));
  if (needle.empty()) return bad_request("q must not be empty");
  std::string type;
  if (auto it = q.find("type"); it != q.end()) type = it->second;
  if (!type.empty() && type != "media" && type != "topics") {
    return bad_request("type must be media or topics");
  }

  struct Hit {
    Match m;
    std::string key;  // casefolded display name
    std::string id;
    json item;
  };
  std::vector<Hit> hits;
  if (type.empty() || type == "media") {
    for (const auto& [id, p] : s.profiles) {
      const auto m = best(match(needle, p.name), match(needle, id));
      if (m.rank > 2) continue;
      hits.push_back({m, utf8::casefold(p.name), "m:" + id,
                      {{"type", "media"},
                       {"id", id},
                       {"name", p.name},
                       {"country", p.country},
                       {"match", std::string(kMatchNames[m.rank])}}});
    }
  }
  if (type.empty() || type == "topics") {
    for (const auto& story : s.clustering.stories) {
      const auto m = best(match(needle, story.title), match(needle, story.slug));
      if (m.rank > 2) continue;
      hits.push_back({m, utf8::casefold(story.title), "t:" + story.id,
                      {{"type", "topics"},
                       {"id", story.id},
                       {"slug", story.slug},
                       {"title", story.title},
                       {"article_count", story.article_ids.size()},
                       {"match", std::string(kMatchNames[m.rank])}}});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.m.rank, a.m.position, a.key, a.id) <
           std::tie(b.m.rank, b.m.position, b.key, b.id);
  });
  json items = json::array();
  for (std::size_t i = 0; i < hits.size() && i < kMaxSearchResults; ++i) {
    items.push_back(std::move(hits[i].item));
  }
  return {200, json{{"items", items}, {"total", hits.size()}, {"q", qit->second}}};
}

ApiResponse ApiService::article(const AnalyticsSnapshot& s, const std::string& id) const {
  const auto* a = s.find_article(id);
  if (!a) return not_found("unknown article '" + id + "'");
  json j = to_json(*a);
  j["medium"] = medium_ref(s, a->medium_id);
  json story = nullptr;
  if (auto it = s.clustering.story_of.find(id); it != s.clustering.story_of.end()) {
    if (const auto* st = s.clustering.find_story(it->second)) {
      story = {{"story_id", st->id}, {"slug", st->slug}, {"title", st->title}};
    }
  }
  j["story"] = story;
  return {200, j};
}

}  // namespace newsdesk::api
