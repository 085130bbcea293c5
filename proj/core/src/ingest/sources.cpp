#include "newsdesk/ingest/sources.hpp"

#include <cctype>
#include <fstream>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/ingest/url.hpp"

namespace newsdesk::ingest {

namespace {

bool valid_country(const std::string& c) {
  return c.size() == 2 && std::isupper(static_cast<unsigned char>(c[0])) &&
         std::isupper(static_cast<unsigned char>(c[1]));
}

}  // namespace

void validate(const FeedSource& feed) {
  if (feed.id.empty()) throw ConfigError("feed without id");
  parse_absolute_url(feed.url);
  if (feed.poll_interval < std::chrono::seconds(60)) {
    throw ConfigError("feed " + feed.id + ": poll_interval must be at least 60 seconds");
  }
  if (!valid_country(feed.country)) {
    throw ConfigError("feed " + feed.id + ": country must be an ISO-3166 alpha-2 code");
  }
}

SourceRegistry::SourceRegistry(std::vector<MediaSource> media, std::vector<FeedSource> feeds)
    : media_(std::move(media)), feeds_(std::move(feeds)) {
  for (const auto& f : feeds_) {
    validate(f);
    if (!media_.empty() && !find_medium(f.medium_id)) {
      throw ConfigError("feed " + f.id + " references unknown medium " + f.medium_id);
    }
  }
  for (const auto& m : media_) {
    if (m.id.empty()) throw ConfigError("medium without id");
    if (!m.country.empty() && !valid_country(m.country)) {
      throw ConfigError("medium " + m.id + ": country must be an ISO-3166 alpha-2 code");
    }
  }
}

SourceRegistry SourceRegistry::from_json(const nlohmann::json& j) {
  std::vector<MediaSource> media;
  for (const auto& m : j.value("media", nlohmann::json::array())) {
    MediaSource s;
    s.id = m.at("id").get<std::string>();
    s.name = m.value("name", s.id);
    s.country = m.value("country", "");
    s.language = parse_enum<Language>(m.value("language", "en"));
    s.homepage = m.value("homepage", "");
    s.logo_url = m.value("logo_url", "");
    if (m.contains("audience") && !m["audience"].is_null()) s.audience = m["audience"];
    media.push_back(std::move(s));
  }
  std::vector<FeedSource> feeds;
  for (const auto& f : j.value("feeds", nlohmann::json::array())) {
    FeedSource s;
    s.id = f.at("id").get<std::string>();
    s.medium_id = f.at("medium_id").get<std::string>();
    s.kind = parse_feed_kind(f.value("kind", "rss"));
    s.url = f.at("url").get<std::string>();
    s.poll_interval = std::chrono::seconds(f.value("poll_interval", 900));
    s.country = f.value("country", "");
    s.language = parse_enum<Language>(f.value("language", "en"));
    feeds.push_back(std::move(s));
  }
  return SourceRegistry(std::move(media), std::move(feeds));
}

SourceRegistry SourceRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sources config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("sources config " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json SourceRegistry::to_json() const {
  nlohmann::json media = nlohmann::json::array();
  for (const auto& m : media_) {
    nlohmann::json o = {{"id", m.id},
                        {"name", m.name},
                        {"country", m.country},
                        {"language", std::string(newsdesk::to_string(m.language))},
                        {"homepage", m.homepage},
                        {"logo_url", m.logo_url}};
    if (m.audience) o["audience"] = *m.audience;
    media.push_back(std::move(o));
  }
  nlohmann::json feeds = nlohmann::json::array();
  for (const auto& f : feeds_) {
    feeds.push_back({{"id", f.id},
                     {"medium_id", f.medium_id},
                     {"kind", std::string(ingest::to_string(f.kind))},
                     {"url", f.url},
                     {"poll_interval", f.poll_interval.count()},
                     {"country", f.country},
                     {"language", std::string(newsdesk::to_string(f.language))}});
  }
  return {{"media", media}, {"feeds", feeds}};
}

const FeedSource* SourceRegistry::find_feed(const std::string& id) const {
  for (const auto& f : feeds_) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const MediaSource* SourceRegistry::find_medium(const MediumId& id) const {
  for (const auto& m : media_) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

SourceConfigWatcher::SourceConfigWatcher(std::filesystem::path path) : path_(std::move(path)) {
  current_ = std::make_shared<const SourceRegistry>(SourceRegistry::load(path_));
  mtime_ = std::filesystem::last_write_time(path_);
}

std::shared_ptr<const SourceRegistry> SourceConfigWatcher::current() const {
  std::lock_guard lock(mu_);
  return current_;
}

bool SourceConfigWatcher::poll() {
  std::error_code ec;
  const auto mtime = std::filesystem::last_write_time(path_, ec);
  std::lock_guard lock(mu_);
  if (ec || mtime == mtime_) return false;
  mtime_ = mtime;
  try {
    current_ = std::make_shared<const SourceRegistry>(SourceRegistry::load(path_));
    last_error_.clear();
    return true;
  } catch (const std::exception& e) {
    last_error_ = e.what();
    return false;
  }
}

std::string SourceConfigWatcher::last_error() const {
  std::lock_guard lock(mu_);
  return last_error_;
}

}  // namespace newsdesk::ingest
