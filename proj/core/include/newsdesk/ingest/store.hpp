#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "newsdesk/ingest/dedup.hpp"
#include "newsdesk/model/article.hpp"

struct sqlite3;

namespace newsdesk::ingest {

struct InsertResult {
  bool inserted = false;
  ArticleId id;  // the stored article: the new one, or the duplicate it matched
};

/// Analysis fields written by the pipeline. Each field, and each claim's
/// stance, is write-once: a value already in the store is kept.
struct Annotations {
  std::optional<SectionLabel> section;
  std::optional<PropagandaResult> propaganda;
  std::map<ClaimId, StanceLabel> stances;
  std::optional<FrameDistribution> frame_distribution;
};

/// Applies write-once annotation semantics to `article`. Returns true when any
/// field changed.
bool apply_annotations(Article& article, const Annotations& annotations);

/// Persistent article collection keyed by id with duplicate detection.
/// Implementations serialize writers: insert_if_absent is atomic per dedup key.
class ArticleStore {
 public:
  virtual ~ArticleStore() = default;

  /// Validates the article (InvariantViolation), then inserts it unless an
  /// article with a matching DedupKey exists.
  virtual InsertResult insert_if_absent(const Article& article) = 0;

  virtual std::optional<Article> get(const ArticleId& id) const = 0;
  virtual std::optional<ArticleId> find_duplicate(const DedupKey& key) const = 0;

  /// All articles ordered by id.
  virtual std::vector<Article> all() const = 0;
  virtual std::size_t size() const = 0;

  /// Throws NotFound for an unknown id.
  virtual void annotate(const ArticleId& id, const Annotations& annotations) = 0;
};

class MemoryArticleStore final : public ArticleStore {
 public:
  InsertResult insert_if_absent(const Article& article) override;
  std::optional<Article> get(const ArticleId& id) const override;
  std::optional<ArticleId> find_duplicate(const DedupKey& key) const override;
  std::vector<Article> all() const override;
  std::size_t size() const override;
  void annotate(const ArticleId& id, const Annotations& annotations) override;

 private:
  mutable std::mutex mu_;
  std::map<ArticleId, Article> articles_;
  std::map<std::uint64_t, ArticleId> by_url_;
  std::map<std::uint64_t, ArticleId> by_fingerprint_;
};

/// SQLite-backed store; one row per article holding its JSON document plus
/// the two dedup hashes under UNIQUE indexes.
class SqliteArticleStore final : public ArticleStore {
 public:
  explicit SqliteArticleStore(const std::filesystem::path& path);
  ~SqliteArticleStore() override;

  SqliteArticleStore(const SqliteArticleStore&) = delete;
  SqliteArticleStore& operator=(const SqliteArticleStore&) = delete;

  InsertResult insert_if_absent(const Article& article) override;
  std::optional<Article> get(const ArticleId& id) const override;
  std::optional<ArticleId> find_duplicate(const DedupKey& key) const override;
  std::vector<Article> all() const override;
  std::size_t size() const override;
  void annotate(const ArticleId& id, const Annotations& annotations) override;

 private:
  std::optional<ArticleId> find_duplicate_locked(const DedupKey& key) const;
  std::optional<Article> get_locked(const ArticleId& id) const;
  void exec(const char* sql) const;

  mutable std::mutex mu_;
  sqlite3* db_ = nullptr;
};

/// One Article JSON object per line, UTF-8, ordered by id.
void export_jsonl(const ArticleStore& store, std::ostream& out);

/// Inserts every line through insert_if_absent and applies its annotations.
/// Returns the number of newly inserted articles.
std::size_t import_jsonl(ArticleStore& store, std::istream& in);

/// Opens a SQLite store for paths ending in .db/.sqlite, otherwise an
/// in-memory store seeded from (and exportable to) a JSON Lines file.
std::unique_ptr<ArticleStore> open_store(const std::filesystem::path& path);

}  // namespace newsdesk::ingest
