#include "newsdesk/ingest/fetch.hpp"

#include <thread>

#include <httplib.h>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/ingest/url.hpp"

namespace newsdesk::ingest {

HttpFetcher::HttpFetcher(std::chrono::milliseconds per_host_delay, std::chrono::seconds timeout)
    : delay_(per_host_delay), timeout_(timeout) {}

std::string HttpFetcher::fetch(const std::string& url) {
  Url u;
  try {
    u = parse_absolute_url(url);
  } catch (const InvalidUrl& e) {
    throw FetchError(e.what());
  }
  const std::string host = url_host(url);
  {
    // Politeness: wait until `delay_` has passed since the last request to
    // this host.
    std::unique_lock lock(mu_);
    auto now = std::chrono::steady_clock::now();
    auto& last = last_request_[host];
    if (last.time_since_epoch().count() != 0 && now - last < delay_) {
      auto wait = delay_ - (now - last);
      last = now + wait;
      lock.unlock();
      std::this_thread::sleep_for(wait);
    } else {
      last = now;
    }
  }
  httplib::Client client(*u.scheme + "://" + *u.authority);
  client.set_follow_location(true);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  std::string target = u.path.empty() ? "/" : u.path;
  if (u.query) target += "?" + *u.query;
  auto res = client.Get(target);
  if (!res) throw FetchError("GET " + url + ": " + httplib::to_string(res.error()));
  if (res->status < 200 || res->status >= 300) {
    throw FetchError("GET " + url + ": HTTP " + std::to_string(res->status));
  }
  return res->body;
}

std::string FixtureFetcher::fetch(const std::string& url) {
  ++requests_;
  auto it = pages_.find(url);
  if (it == pages_.end()) throw FetchError("no fixture for " + url);
  return it->second;
}

CrawlResult crawl_feed(const FeedSource& feed, Fetcher& fetcher,
                       const std::function<Timestamp()>& clock) {
  CrawlResult result;
  const std::string raw = fetcher.fetch(feed.url);
  const auto entries = parse_feed(raw, feed.kind, feed.url);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    try {
      RawDocument doc;
      doc.fetch_url = e.link;
      doc.body_html = fetcher.fetch(e.link);
      doc.fetched_at = clock();
      doc.source_id = feed.id;
      doc.published_hint = e.published_at;
      doc.title_hint = e.title;
      if (doc.body_html.empty()) throw FetchError("empty body");
      result.documents.push_back(std::move(doc));
    } catch (const FetchError& err) {
      result.errors.push_back({i, e.link, err.what()});
    }
  }
  return result;
}

}  // namespace newsdesk::ingest
