#include "newsdesk/ingest/store.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <sqlite3.h>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::ingest {

bool apply_annotations(Article& article, const Annotations& a) {
  bool changed = false;
  if (a.section && !article.section) {
    article.section = a.section;
    changed = true;
  }
  if (a.propaganda && !article.propaganda) {
    article.propaganda = a.propaganda;
    changed = true;
  }
  for (const auto& [claim, label] : a.stances) {
    if (article.stances.emplace(claim, label).second) changed = true;
  }
  if (a.frame_distribution && !article.frame_distribution) {
    article.frame_distribution = a.frame_distribution;
    changed = true;
  }
  return changed;
}

// ---------------------------------------------------------------- memory

InsertResult MemoryArticleStore::insert_if_absent(const Article& article) {
  validate(article);
  const DedupKey key = dedup_key(article);
  std::lock_guard lock(mu_);
  if (auto it = by_url_.find(key.url_hash); it != by_url_.end()) return {false, it->second};
  if (auto it = by_fingerprint_.find(key.content_fingerprint); it != by_fingerprint_.end()) {
    return {false, it->second};
  }
  articles_.emplace(article.id, article);
  by_url_.emplace(key.url_hash, article.id);
  by_fingerprint_.emplace(key.content_fingerprint, article.id);
  return {true, article.id};
}

std::optional<Article> MemoryArticleStore::get(const ArticleId& id) const {
  std::lock_guard lock(mu_);
  auto it = articles_.find(id);
  if (it == articles_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArticleId> MemoryArticleStore::find_duplicate(const DedupKey& key) const {
  std::lock_guard lock(mu_);
  if (auto it = by_url_.find(key.url_hash); it != by_url_.end()) return it->second;
  if (auto it = by_fingerprint_.find(key.content_fingerprint); it != by_fingerprint_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::vector<Article> MemoryArticleStore::all() const {
  std::lock_guard lock(mu_);
  std::vector<Article> out;
  out.reserve(articles_.size());
  for (const auto& [id, a] : articles_) out.push_back(a);
  return out;
}

std::size_t MemoryArticleStore::size() const {
  std::lock_guard lock(mu_);
  return articles_.size();
}

void MemoryArticleStore::annotate(const ArticleId& id, const Annotations& annotations) {
  std::lock_guard lock(mu_);
  auto it = articles_.find(id);
  if (it == articles_.end()) throw NotFound("article " + id);
  Article updated = it->second;
  apply_annotations(updated, annotations);
  validate(updated);
  it->second = std::move(updated);
}

// ---------------------------------------------------------------- sqlite

namespace {

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw StoreError(std::string("sqlite prepare: ") + sqlite3_errmsg(db));
    }
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  void bind(int i, const std::string& s) {
    sqlite3_bind_text(stmt_, i, s.data(), static_cast<int>(s.size()), SQLITE_TRANSIENT);
  }
  void bind(int i, std::uint64_t v) {
    sqlite3_bind_int64(stmt_, i, std::bit_cast<sqlite3_int64>(v));
  }
  bool step() {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    throw StoreError(std::string("sqlite step: ") + sqlite3_errmsg(db_));
  }
  std::string text(int col) const {
    const auto* p = sqlite3_column_text(stmt_, col);
    return p ? std::string(reinterpret_cast<const char*>(p),
                           static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col)))
             : std::string();
  }
  std::int64_t integer(int col) const { return sqlite3_column_int64(stmt_, col); }

 private:
  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
};

}  // namespace

SqliteArticleStore::SqliteArticleStore(const std::filesystem::path& path) {
  if (sqlite3_open_v2(path.string().c_str(), &db_,
                      SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX,
                      nullptr) != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "out of memory";
    sqlite3_close(db_);
    db_ = nullptr;
    throw StoreError("cannot open " + path.string() + ": " + msg);
  }
  exec("PRAGMA journal_mode=WAL");
  exec("PRAGMA synchronous=NORMAL");
  exec(
      "CREATE TABLE IF NOT EXISTS articles ("
      " id TEXT PRIMARY KEY,"
      " url_hash INTEGER NOT NULL UNIQUE,"
      " fingerprint INTEGER NOT NULL UNIQUE,"
      " doc TEXT NOT NULL)");
}

SqliteArticleStore::~SqliteArticleStore() { sqlite3_close(db_); }

void SqliteArticleStore::exec(const char* sql) const {
  char* err = nullptr;
  if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw StoreError(std::string("sqlite: ") + msg);
  }
}

std::optional<ArticleId> SqliteArticleStore::find_duplicate_locked(const DedupKey& key) const {
  Statement st(db_, "SELECT id FROM articles WHERE url_hash = ?1 OR fingerprint = ?2 "
                    "ORDER BY (url_hash = ?1) DESC LIMIT 1");
  st.bind(1, key.url_hash);
  st.bind(2, key.content_fingerprint);
  if (st.step()) return st.text(0);
  return std::nullopt;
}

std::optional<Article> SqliteArticleStore::get_locked(const ArticleId& id) const {
  Statement st(db_, "SELECT doc FROM articles WHERE id = ?1");
  st.bind(1, id);
  if (!st.step()) return std::nullopt;
  return article_from_json(nlohmann::json::parse(st.text(0)));
}

InsertResult SqliteArticleStore::insert_if_absent(const Article& article) {
  validate(article);
  const DedupKey key = dedup_key(article);
  std::lock_guard lock(mu_);
  exec("BEGIN IMMEDIATE");
  try {
    if (auto existing = find_duplicate_locked(key)) {
      exec("COMMIT");
      return {false, *existing};
    }
    Statement st(db_, "INSERT INTO articles (id, url_hash, fingerprint, doc) VALUES (?1,?2,?3,?4)");
    st.bind(1, article.id);
    st.bind(2, key.url_hash);
    st.bind(3, key.content_fingerprint);
    st.bind(4, to_json(article).dump());
    st.step();
    exec("COMMIT");
  } catch (...) {
    exec("ROLLBACK");
    throw;
  }
  return {true, article.id};
}

std::optional<Article> SqliteArticleStore::get(const ArticleId& id) const {
  std::lock_guard lock(mu_);
  return get_locked(id);
}

std::optional<ArticleId> SqliteArticleStore::find_duplicate(const DedupKey& key) const {
  std::lock_guard lock(mu_);
  return find_duplicate_locked(key);
}

std::vector<Article> SqliteArticleStore::all() const {
  std::lock_guard lock(mu_);
  Statement st(db_, "SELECT doc FROM articles ORDER BY id");
  std::vector<Article> out;
  while (st.step()) out.push_back(article_from_json(nlohmann::json::parse(st.text(0))));
  return out;
}

std::size_t SqliteArticleStore::size() const {
  std::lock_guard lock(mu_);
  Statement st(db_, "SELECT COUNT(*) FROM articles");
  st.step();
  return static_cast<std::size_t>(st.integer(0));
}

void SqliteArticleStore::annotate(const ArticleId& id, const Annotations& annotations) {
  std::lock_guard lock(mu_);
  exec("BEGIN IMMEDIATE");
  try {
    auto article = get_locked(id);
    if (!article) throw NotFound("article " + id);
    if (apply_annotations(*article, annotations)) {
      validate(*article);
      Statement st(db_, "UPDATE articles SET doc = ?2 WHERE id = ?1");
      st.bind(1, id);
      st.bind(2, to_json(*article).dump());
      st.step();
    }
    exec("COMMIT");
  } catch (...) {
    exec("ROLLBACK");
    throw;
  }
}

// ---------------------------------------------------------------- JSON Lines

void export_jsonl(const ArticleStore& store, std::ostream& out) {
  for (const auto& a : store.all()) out << to_json(a).dump() << '\n';
}

std::size_t import_jsonl(ArticleStore& store, std::istream& in) {
  std::size_t inserted = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw StoreError("line " + std::to_string(line_no) + ": " + e.what());
    }
    Article a = article_from_json(j);
    auto result = store.insert_if_absent(a);
    if (result.inserted) ++inserted;
    Annotations ann{a.section, a.propaganda, a.stances, a.frame_distribution};
    store.annotate(result.id, ann);
  }
  return inserted;
}

std::unique_ptr<ArticleStore> open_store(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".db" || ext == ".sqlite" || ext == ".sqlite3") {
    return std::make_unique<SqliteArticleStore>(path);
  }
  auto store = std::make_unique<MemoryArticleStore>();
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    import_jsonl(*store, in);
  }
  return store;
}

}  // namespace newsdesk::ingest
