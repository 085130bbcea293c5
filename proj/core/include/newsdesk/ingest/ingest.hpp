#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/common/time.hpp"
#include "newsdesk/ingest/extract.hpp"
#include "newsdesk/ingest/sources.hpp"
#include "newsdesk/ingest/store.hpp"
#include "newsdesk/ingest/translator.hpp"

namespace newsdesk::ingest {

struct RawDocument {
  std::string fetch_url;
  Timestamp fetched_at{};
  std::string body_html;
  std::string source_id;
  // Carried over from the feed entry when the feed provides them.
  std::optional<Timestamp> published_hint;
  std::string title_hint;

  friend bool operator==(const RawDocument&, const RawDocument&) = default;
};

nlohmann::json to_json(const RawDocument& doc);
RawDocument raw_document_from_json(const nlohmann::json& j);

struct DocumentError {
  std::size_t index = 0;
  std::string fetch_url;
  std::string message;
};

struct IngestOutcome {
  Article article;  // as stored
  bool inserted = false;
};

struct IngestReport {
  std::vector<Article> new_articles;
  std::vector<DocumentError> errors;
};

using SourceLookup = std::function<std::optional<FeedSource>(const std::string& source_id)>;

SourceLookup lookup_in(std::shared_ptr<const SourceRegistry> registry);
SourceLookup lookup_in(const SourceConfigWatcher& watcher);

/// Extraction, canonicalization, translation and de-duplicated persistence
/// of fetched documents.
class Ingestor {
 public:
  Ingestor(ArticleStore& store, const ContentExtractor& extractor, const Translator& translator,
           SourceLookup sources);

  /// Builds the Article for one document without touching the store. Throws
  /// ExtractError (unknown source, no text, bad URL).
  Article build_article(const RawDocument& doc) const;

  /// Inserts the document's article unless a duplicate exists, and returns
  /// the stored article either way.
  IngestOutcome ingest_one(const RawDocument& doc);

  /// Newly inserted articles only, in input order. Per-document extraction
  /// failures are collected and the batch continues. Re-delivering the same
  /// batch inserts nothing.
  IngestReport ingest_batch(std::span<const RawDocument> docs);

 private:
  ArticleStore& store_;
  const ContentExtractor& extractor_;
  const Translator& translator_;
  SourceLookup sources_;
};

}  // namespace newsdesk::ingest
