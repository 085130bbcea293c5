#include <gtest/gtest.h>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/time.hpp"
#include "newsdesk/ingest/extract.hpp"
#include "newsdesk/ingest/ingest.hpp"
#include "newsdesk/ingest/store.hpp"
#include "newsdesk/ingest/translator.hpp"

using namespace newsdesk;
using namespace newsdesk::ingest;

namespace {

std::shared_ptr<SourceRegistry> registry() {
  FeedSource f1{"f1", "m", FeedKind::rss, "https://m.example/rss", std::chrono::seconds(300), "GB",
                Language::en};
  FeedSource f2 = f1;
  f2.id = "f2";
  f2.url = "https://m.example/world/rss";
  FeedSource ar{"ar", "q", FeedKind::rss, "https://q.example/rss", std::chrono::seconds(300), "QA",
                Language::ar};
  return std::make_shared<SourceRegistry>(
      std::vector<MediaSource>{{"m", "M", "GB", Language::en, "", "", std::nullopt},
                               {"q", "Q", "QA", Language::ar, "", "", std::nullopt}},
      std::vector<FeedSource>{f1, f2, ar});
}

RawDocument doc(std::string url, std::string body, std::string source = "f1") {
  RawDocument d;
  d.fetch_url = std::move(url);
  d.fetched_at = from_unix(1556668800);
  d.body_html = "<html><title>Title</title><p>" + std::move(body) + "</p></html>";
  d.source_id = std::move(source);
  return d;
}

struct IngestFixture {
  MemoryArticleStore store;
  ParagraphBlockExtractor extractor;
  IdentityTranslator translator;
  Ingestor ingestor{store, extractor, translator, lookup_in(registry())};
};

}  // namespace

TEST(Ingest, BuildsCanonicalArticle) {
  IngestFixture fx;
  auto d = doc("HTTPS://M.example:443/a?utm_source=rss#top", "Body text.");
  d.published_hint = from_unix(1556600000);
  const auto a = fx.ingestor.build_article(d);
  EXPECT_EQ(a.canonical_url, "https://m.example/a");
  EXPECT_EQ(a.id, article_id_for("https://m.example/a"));
  EXPECT_EQ(a.medium_id, "m");
  EXPECT_EQ(a.title, "Title");
  EXPECT_EQ(a.body, "Body text.");
  EXPECT_EQ(a.language, Language::en);
  EXPECT_EQ(to_unix(a.published_at), 1556600000);
  EXPECT_NO_THROW(validate(a));
}

TEST(Ingest, PublishedAtFallsBackToFetchedAt) {
  IngestFixture fx;
  const auto a = fx.ingestor.build_article(doc("https://m.example/a", "x"));
  EXPECT_EQ(a.published_at, a.fetched_at);
}

TEST(Ingest, LanguageComesFromTheSourceAndTextIsKept) {
  IngestFixture fx;
  const auto a = fx.ingestor.build_article(doc("https://q.example/1", "زلزال قوي", "ar"));
  EXPECT_EQ(a.language, Language::ar);
  EXPECT_EQ(a.body, "زلزال قوي");
}

TEST(Ingest, SameArticleFromTwoFeedsIsStoredOnce) {
  IngestFixture fx;
  const std::vector<RawDocument> batch{doc("https://m.example/a", "Story one."),
                                       doc("https://m.example/a#x", "Story one.", "f2"),
                                       doc("https://m.example/b", "Story two.")};
  const auto first = fx.ingestor.ingest_batch(batch);
  EXPECT_EQ(first.new_articles.size(), 2u);
  EXPECT_TRUE(first.errors.empty());
  EXPECT_EQ(fx.store.size(), 2u);
}

TEST(Ingest, SameBodyUnderAnotherUrlIsADuplicate) {
  IngestFixture fx;
  const auto a = fx.ingestor.ingest_one(doc("https://m.example/a", "Same  body."));
  const auto b = fx.ingestor.ingest_one(doc("https://m.example/amp/a", "same body."));
  EXPECT_TRUE(a.inserted);
  EXPECT_FALSE(b.inserted);
  EXPECT_EQ(b.article.id, a.article.id);
}

TEST(Ingest, RedeliveryInsertsNothing) {
  IngestFixture fx;
  std::vector<RawDocument> batch;
  for (int i = 0; i < 20; ++i) {
    batch.push_back(doc("https://m.example/" + std::to_string(i), "Body " + std::to_string(i)));
  }
  EXPECT_EQ(fx.ingestor.ingest_batch(batch).new_articles.size(), 20u);
  const auto before = fx.store.all();
  EXPECT_TRUE(fx.ingestor.ingest_batch(batch).new_articles.empty());
  EXPECT_EQ(fx.store.all(), before);
}

TEST(Ingest, ExtractionFailuresAreCollectedAndTheBatchContinues) {
  IngestFixture fx;
  auto no_text = doc("https://m.example/empty", "");
  no_text.body_html = "<html><div>nothing</div></html>";
  const std::vector<RawDocument> batch{no_text, doc("https://m.example/u", "x", "nobody"),
                                       doc("not a url", "x"), doc("https://m.example/ok", "fine")};
  const auto report = fx.ingestor.ingest_batch(batch);
  ASSERT_EQ(report.new_articles.size(), 1u);
  EXPECT_EQ(report.new_articles[0].canonical_url, "https://m.example/ok");
  ASSERT_EQ(report.errors.size(), 3u);
  EXPECT_EQ(report.errors[0].index, 0u);
  EXPECT_EQ(report.errors[1].index, 1u);
  EXPECT_EQ(report.errors[2].index, 2u);
}

TEST(RawDocument, JsonRoundTrip) {
  auto d = doc("https://m.example/a", "b");
  d.published_hint = from_unix(5);
  d.title_hint = "hint";
  EXPECT_EQ(raw_document_from_json(to_json(d)), d);
}
