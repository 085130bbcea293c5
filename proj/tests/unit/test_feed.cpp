#include <gtest/gtest.h>

#include <fstream>
#include <thread>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/time.hpp"
#include "newsdesk/ingest/feed.hpp"
#include "newsdesk/ingest/fetch.hpp"
#include "newsdesk/ingest/sources.hpp"
#include "support/pipeline_harness.hpp"

using namespace newsdesk;
using namespace newsdesk::ingest;

namespace {

std::string rss(const std::string& items) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?><rss version=\"2.0\"><channel><title>T</title>" +
         items + "</channel></rss>";
}

}  // namespace

TEST(ParseFeed, MinimalRssItem) {
  const auto entries =
      parse_feed(rss("<item><title>A</title><link>https://x.y/a</link></item>"), FeedKind::rss,
                 "https://x.y/feed");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].link, "https://x.y/a");
  EXPECT_EQ(entries[0].title, "A");
  EXPECT_FALSE(entries[0].published_at);
}

TEST(ParseFeed, EmptyFeed) {
  EXPECT_TRUE(parse_feed(rss(""), FeedKind::rss, "https://x.y/feed").empty());
}

TEST(ParseFeed, RelativeLinksResolveAgainstFeedUrl) {
  const auto entries =
      parse_feed(rss("<item><link>/a</link></item><item><link>b/c</link></item>"), FeedKind::rss,
                 "https://x.y/news/feed");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].link, "https://x.y/a");
  EXPECT_EQ(entries[1].link, "https://x.y/news/b/c");
}

TEST(ParseFeed, RssDatesEntitiesAndCdata) {
  const auto entries = parse_feed(
      rss("<item><title><![CDATA[Rates & <b>more</b>]]></title><link>https://x.y/a?p=1&amp;q=2</link>"
          "<pubDate>Tue, 10 Jun 2003 04:00:00 GMT</pubDate></item>"
          "<item><title>no link</title></item>"),
      FeedKind::rss, "https://x.y/feed");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].title, "Rates & <b>more</b>");
  EXPECT_EQ(entries[0].link, "https://x.y/a?p=1&q=2");
  ASSERT_TRUE(entries[0].published_at);
  EXPECT_EQ(format_iso8601(*entries[0].published_at), "2003-06-10T04:00:00Z");
}

TEST(ParseFeed, RdfRss) {
  const std::string rdf =
      "<?xml version=\"1.0\"?><rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\" "
      "xmlns=\"http://purl.org/rss/1.0/\" xmlns:dc=\"http://purl.org/dc/elements/1.1/\">"
      "<channel><title>c</title></channel>"
      "<item><title>one</title><link>https://x.y/1</link><dc:date>2019-05-01T10:00:00Z</dc:date></item>"
      "</rdf:RDF>";
  const auto entries = parse_feed(rdf, FeedKind::rss, "https://x.y/rdf");
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].link, "https://x.y/1");
  ASSERT_TRUE(entries[0].published_at);
  EXPECT_EQ(format_iso8601(*entries[0].published_at), "2019-05-01T10:00:00Z");
}

TEST(ParseFeed, Atom) {
  const std::string atom =
      "<?xml version=\"1.0\"?><feed xmlns=\"http://www.w3.org/2005/Atom\"><title>f</title>"
      "<entry><title>e1</title><link rel=\"alternate\" href=\"/e1\"/>"
      "<link rel=\"self\" href=\"/self\"/><published>2019-05-02T08:00:00+02:00</published></entry>"
      "<entry><title>e2</title><link href=\"https://x.y/e2\"/><updated>2019-05-03T00:00:00Z</updated></entry>"
      "</feed>";
  const auto entries = parse_feed(atom, FeedKind::atom, "https://x.y/atom");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].link, "https://x.y/e1");
  EXPECT_EQ(format_iso8601(*entries[0].published_at), "2019-05-02T06:00:00Z");
  EXPECT_EQ(entries[1].link, "https://x.y/e2");
}

TEST(ParseFeed, ListPageKeepsSameHostAnchorsWithText) {
  const std::string html =
      "<html><body><a href=\"/s/1\">First story</a><a href=\"https://other.example/x\">Away</a>"
      "<a href=\"/s/2\"><img src=i.png></a><a href=\"s/3\">Third</a></body></html>";
  const auto entries = parse_feed(html, FeedKind::list_page, "https://x.y/news/");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].link, "https://x.y/s/1");
  EXPECT_EQ(entries[0].title, "First story");
  EXPECT_EQ(entries[1].link, "https://x.y/news/s/3");
}

TEST(ParseFeed, MalformedXmlReportsByteOffset) {
  const std::string bad = "<rss><channel><item><link>https://x.y/a</item></channel></rss>";
  try {
    parse_feed(bad, FeedKind::rss, "https://x.y/feed");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.offset(), 20u);
    EXPECT_LE(e.offset(), bad.size());
  }
  EXPECT_THROW(parse_feed("", FeedKind::rss, "https://x.y/feed"), ParseError);
  EXPECT_THROW(parse_feed_kind("twitter"), UnsupportedKind);
  EXPECT_EQ(parse_feed_kind("list-page"), FeedKind::list_page);
}

TEST(CrawlFeed, FetchesLinkedPagesAndReportsFailures) {
  FixtureFetcher fetcher;
  fetcher.add("https://x.y/feed", rss("<item><title>ok</title><link>/a</link>"
                                      "<pubDate>Tue, 10 Jun 2003 04:00:00 GMT</pubDate></item>"
                                      "<item><link>/missing</link></item>"));
  fetcher.add("https://x.y/a", "<html><p>body</p></html>");
  FeedSource feed;
  feed.id = "f";
  feed.medium_id = "m";
  feed.url = "https://x.y/feed";
  feed.country = "GB";
  const auto now = from_unix(1556668800);
  const auto result = crawl_feed(feed, fetcher, [now] { return now; });
  ASSERT_EQ(result.documents.size(), 1u);
  EXPECT_EQ(result.documents[0].fetch_url, "https://x.y/a");
  EXPECT_EQ(result.documents[0].source_id, "f");
  EXPECT_EQ(result.documents[0].fetched_at, now);
  EXPECT_EQ(result.documents[0].title_hint, "ok");
  ASSERT_EQ(result.errors.size(), 1u);
  EXPECT_EQ(result.errors[0].fetch_url, "https://x.y/missing");
}

TEST(SourceRegistry, ValidatesFeeds) {
  const auto good = nlohmann::json::parse(R"({
    "media": [{"id": "m", "name": "M", "country": "GB", "language": "en"}],
    "feeds": [{"id": "f", "medium_id": "m", "kind": "atom", "url": "https://m.example/atom",
               "poll_interval": 60, "country": "GB", "language": "en"}]})");
  const auto reg = SourceRegistry::from_json(good);
  ASSERT_NE(reg.find_feed("f"), nullptr);
  EXPECT_EQ(reg.find_feed("f")->kind, FeedKind::atom);
  EXPECT_EQ(SourceRegistry::from_json(reg.to_json()).to_json(), reg.to_json());

  auto short_poll = good;
  short_poll["feeds"][0]["poll_interval"] = 59;
  EXPECT_THROW(SourceRegistry::from_json(short_poll), ConfigError);
  auto relative = good;
  relative["feeds"][0]["url"] = "/atom";
  EXPECT_THROW(SourceRegistry::from_json(relative), InvalidUrl);
  auto kind = good;
  kind["feeds"][0]["kind"] = "twitter";
  EXPECT_THROW(SourceRegistry::from_json(kind), UnsupportedKind);
  auto country = good;
  country["feeds"][0]["country"] = "gbr";
  EXPECT_THROW(SourceRegistry::from_json(country), ConfigError);
}

TEST(SourceConfigWatcher, ReloadsOnChangeAndKeepsLastGood) {
  const auto dir = newsdesk::testing::scratch_dir("watcher");
  const auto path = dir / "sources.json";
  auto write = [&](const std::string& text) {
    std::ofstream(path) << text;
    // Make the change visible to a coarse mtime.
    std::filesystem::last_write_time(path, std::filesystem::last_write_time(path) +
                                               std::chrono::seconds(2));
  };
  write(R"({"media": [{"id": "a", "name": "A", "country": "GB", "language": "en"}], "feeds": []})");
  SourceConfigWatcher w(path);
  EXPECT_EQ(w.current()->media().size(), 1u);
  EXPECT_FALSE(w.poll());

  write(R"({"media": [{"id": "a", "name": "A", "country": "GB", "language": "en"},
                      {"id": "b", "name": "B", "country": "US", "language": "en"}], "feeds": []})");
  EXPECT_TRUE(w.poll());
  EXPECT_EQ(w.current()->media().size(), 2u);

  write("{ not json");
  EXPECT_FALSE(w.poll());
  EXPECT_EQ(w.current()->media().size(), 2u);
  EXPECT_FALSE(w.last_error().empty());
}
