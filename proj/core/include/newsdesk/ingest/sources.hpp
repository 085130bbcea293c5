#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/ingest/feed.hpp"
#include "newsdesk/model/article.hpp"

namespace newsdesk::ingest {

struct FeedSource {
  std::string id;
  MediumId medium_id;
  FeedKind kind = FeedKind::rss;
  std::string url;
  std::chrono::seconds poll_interval{900};
  std::string country;  // ISO-3166 alpha-2
  Language language = Language::en;
};

struct MediaSource {
  MediumId id;
  std::string name;
  std::string country;
  Language language = Language::en;
  std::string homepage;
  std::string logo_url;
  std::optional<nlohmann::json> audience;  // static display fixture
};

/// Media outlets and their feeds, loaded from the sources config file:
///
///   {"media": [{"id", "name", "country", "language", "homepage"?, "logo_url"?,
///               "audience"?}],
///    "feeds": [{"id", "medium_id", "kind": "rss"|"atom"|"list-page", "url",
///               "poll_interval": seconds >= 60, "country", "language"}]}
class SourceRegistry {
 public:
  SourceRegistry() = default;
  SourceRegistry(std::vector<MediaSource> media, std::vector<FeedSource> feeds);

  /// Throws ConfigError on schema violations, InvalidUrl on bad feed URLs,
  /// UnsupportedKind on unknown feed kinds.
  static SourceRegistry from_json(const nlohmann::json& j);
  static SourceRegistry load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  const std::vector<MediaSource>& media() const { return media_; }
  const std::vector<FeedSource>& feeds() const { return feeds_; }

  const FeedSource* find_feed(const std::string& id) const;
  const MediaSource* find_medium(const MediumId& id) const;

 private:
  std::vector<MediaSource> media_;
  std::vector<FeedSource> feeds_;
};

/// Throws on invariant violations: non-absolute URL, poll interval below 60 s,
/// malformed country code.
void validate(const FeedSource& feed);

/// Re-reads the config file when its modification time changes. A config that
/// fails to load leaves the previous registry in place.
class SourceConfigWatcher {
 public:
  explicit SourceConfigWatcher(std::filesystem::path path);

  std::shared_ptr<const SourceRegistry> current() const;

  /// Returns true when a new registry was loaded.
  bool poll();

  /// Message of the last failed reload, empty when the last reload succeeded.
  std::string last_error() const;

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::shared_ptr<const SourceRegistry> current_;
  std::filesystem::file_time_type mtime_{};
  std::string last_error_;
};

}  // namespace newsdesk::ingest
