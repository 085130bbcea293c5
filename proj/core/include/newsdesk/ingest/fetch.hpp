#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "newsdesk/ingest/ingest.hpp"

namespace newsdesk::ingest {

class Fetcher {
 public:
  virtual ~Fetcher() = default;
  /// Body of the resource at `url`. Throws FetchError.
  virtual std::string fetch(const std::string& url) = 0;
};

/// HTTP(S) GET with redirects and a fixed minimum delay between requests to
/// the same host.
class HttpFetcher final : public Fetcher {
 public:
  explicit HttpFetcher(std::chrono::milliseconds per_host_delay = std::chrono::seconds(1),
                       std::chrono::seconds timeout = std::chrono::seconds(20));
  std::string fetch(const std::string& url) override;

 private:
  std::chrono::milliseconds delay_;
  std::chrono::seconds timeout_;
  std::mutex mu_;
  std::map<std::string, std::chrono::steady_clock::time_point> last_request_;
};

/// Serves canned bodies; unknown URLs throw FetchError.
class FixtureFetcher final : public Fetcher {
 public:
  void add(std::string url, std::string body) { pages_[std::move(url)] = std::move(body); }
  std::string fetch(const std::string& url) override;
  std::size_t requests() const { return requests_; }

 private:
  std::map<std::string, std::string> pages_;
  std::size_t requests_ = 0;
};

struct CrawlResult {
  std::vector<RawDocument> documents;
  std::vector<DocumentError> errors;
};

/// Fetches and parses one feed, then fetches every linked page.
CrawlResult crawl_feed(const FeedSource& feed, Fetcher& fetcher,
                       const std::function<Timestamp()>& clock);

}  // namespace newsdesk::ingest
