#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "newsdesk/profiles/snapshot.hpp"

namespace newsdesk::api {

enum class ErrorCode { not_found, bad_request, internal };

std::string_view to_string(ErrorCode code);

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

ApiResponse error_response(int status, ErrorCode code, std::string message);

using Query = std::map<std::string, std::string>;

inline constexpr std::size_t kDefaultPageSize = 20;
inline constexpr std::size_t kMaxPageSize = 100;
inline constexpr std::size_t kRecentArticles = 20;
inline constexpr std::size_t kMaxSearchResults = 50;

/// The /v1 read API. Every request is answered from the snapshot current at
/// the time of the call, so a response never mixes two snapshots.
///
///   GET /v1/stories?lang=en|ar&page=1&page_size=20
///   GET /v1/media/{id}
///   GET /v1/topics/{slug or story id}
///   GET /v1/search?q=...&type=media|topics
///   GET /v1/articles/{id}
class ApiService {
 public:
  explicit ApiService(const profiles::SnapshotHolder& snapshots) : snapshots_(snapshots) {}

  /// `path` is percent-decoded and has no query string.
  ApiResponse handle(std::string_view method, std::string_view path, const Query& query) const;

  ApiResponse stories(const profiles::AnalyticsSnapshot& s, const Query& q) const;
  ApiResponse medium(const profiles::AnalyticsSnapshot& s, const std::string& id) const;
  ApiResponse topic(const profiles::AnalyticsSnapshot& s, const std::string& slug) const;
  ApiResponse search(const profiles::AnalyticsSnapshot& s, const Query& q) const;
  ApiResponse article(const profiles::AnalyticsSnapshot& s, const std::string& id) const;

 private:
  const profiles::SnapshotHolder& snapshots_;
};

/// Summary entry used in story cards and recent-article lists.
nlohmann::json article_entry(const profiles::AnalyticsSnapshot& s, const Article& a);

/// Card for one story: articles newest first, `updated_at` the newest
/// publication time.
nlohmann::json story_card(const profiles::AnalyticsSnapshot& s, const clustering::Story& story);

}  // namespace newsdesk::api
