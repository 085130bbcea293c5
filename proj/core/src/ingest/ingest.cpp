#include "newsdesk/ingest/ingest.hpp"

#include "newsdesk/common/errors.hpp"
#include "newsdesk/ingest/url.hpp"

namespace newsdesk::ingest {

nlohmann::json to_json(const RawDocument& doc) {
  nlohmann::json j = {{"fetch_url", doc.fetch_url},
                      {"fetched_at", format_iso8601(doc.fetched_at)},
                      {"body_html", doc.body_html},
                      {"source_id", doc.source_id}};
  if (doc.published_hint) j["published_hint"] = format_iso8601(*doc.published_hint);
  if (!doc.title_hint.empty()) j["title_hint"] = doc.title_hint;
  return j;
}

RawDocument raw_document_from_json(const nlohmann::json& j) {
  RawDocument d;
  d.fetch_url = j.at("fetch_url").get<std::string>();
  auto fetched = parse_any_date(j.at("fetched_at").get<std::string>());
  if (!fetched) throw ConfigError("bad fetched_at");
  d.fetched_at = *fetched;
  d.body_html = j.at("body_html").get<std::string>();
  d.source_id = j.at("source_id").get<std::string>();
  if (j.contains("published_hint")) d.published_hint = parse_any_date(j["published_hint"].get<std::string>());
  d.title_hint = j.value("title_hint", "");
  return d;
}

SourceLookup lookup_in(std::shared_ptr<const SourceRegistry> registry) {
  return [registry = std::move(registry)](const std::string& id) -> std::optional<FeedSource> {
    if (const auto* f = registry->find_feed(id)) return *f;
    return std::nullopt;
  };
}

SourceLookup lookup_in(const SourceConfigWatcher& watcher) {
  return [&watcher](const std::string& id) -> std::optional<FeedSource> {
    auto registry = watcher.current();
    if (const auto* f = registry->find_feed(id)) return *f;
    return std::nullopt;
  };
}

Ingestor::Ingestor(ArticleStore& store, const ContentExtractor& extractor,
                   const Translator& translator, SourceLookup sources)
    : store_(store), extractor_(extractor), translator_(translator), sources_(std::move(sources)) {}

Article Ingestor::build_article(const RawDocument& doc) const {
  if (doc.body_html.empty()) throw ExtractError("empty document body: " + doc.fetch_url);
  const auto source = sources_(doc.source_id);
  if (!source) throw ExtractError("unknown source '" + doc.source_id + "'");

  std::string canonical;
  try {
    canonical = canonicalize_url(doc.fetch_url);
  } catch (const InvalidUrl& e) {
    throw ExtractError(std::string("bad article URL: ") + e.what());
  }

  ExtractedContent content = extractor_.extract(doc.body_html);
  Article a;
  a.id = article_id_for(canonical);
  a.canonical_url = std::move(canonical);
  a.medium_id = source->medium_id;
  a.title = !content.title.empty() ? std::move(content.title) : doc.title_hint;

  // The pipeline serves content in its original language; the translator slot
  // is where a real MT backend would plug in.
  auto body = translator_.translate(content.body, source->language, source->language);
  a.body = std::move(body.text);
  a.language = body.language;
  a.published_at = doc.published_hint.value_or(content.published_at.value_or(doc.fetched_at));
  a.fetched_at = doc.fetched_at;
  return a;
}

IngestOutcome Ingestor::ingest_one(const RawDocument& doc) {
  Article a = build_article(doc);
  auto result = store_.insert_if_absent(a);
  if (result.inserted) return {std::move(a), true};
  auto stored = store_.get(result.id);
  if (!stored) throw StoreError("duplicate vanished from store: " + result.id);
  return {std::move(*stored), false};
}

IngestReport Ingestor::ingest_batch(std::span<const RawDocument> docs) {
  IngestReport report;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    try {
      auto outcome = ingest_one(docs[i]);
      if (outcome.inserted) report.new_articles.push_back(std::move(outcome.article));
    } catch (const ExtractError& e) {
      report.errors.push_back({i, docs[i].fetch_url, e.what()});
    }
  }
  return report;
}

}  // namespace newsdesk::ingest
