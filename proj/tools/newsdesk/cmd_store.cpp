#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "common.hpp"
#include "newsdesk/common/errors.hpp"
#include "newsdesk/ingest/store.hpp"

namespace fs = std::filesystem;

namespace newsdesk::cli {

namespace {

struct StoreOptions {
  ConfigFlags config;
  std::string file;
};

bool is_sqlite(const fs::path& p) {
  const auto ext = p.extension().string();
  return ext == ".db" || ext == ".sqlite" || ext == ".sqlite3";
}

void run_export(const StoreOptions& opt) {
  const auto path = opt.config.resolve().effective_store_path();
  if (!fs::exists(path)) throw NotFound("no store at " + path.string());
  auto store = ingest::open_store(path);
  if (opt.file.empty() || opt.file == "-") {
    ingest::export_jsonl(*store, std::cout);
    return;
  }
  std::ofstream out(opt.file, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + opt.file);
  ingest::export_jsonl(*store, out);
}

void run_import(const StoreOptions& opt) {
  const auto path = opt.config.resolve().effective_store_path();
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  auto store = ingest::open_store(path);
  std::size_t inserted = 0;
  if (opt.file.empty() || opt.file == "-") {
    inserted = ingest::import_jsonl(*store, std::cin);
  } else {
    std::ifstream in(opt.file);
    if (!in) throw ConfigError("cannot read " + opt.file);
    inserted = ingest::import_jsonl(*store, in);
  }
  if (!is_sqlite(path)) {
    // JSON Lines stores live in memory; write the merged set back.
    const auto tmp = fs::path(path.string() + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary);
      ingest::export_jsonl(*store, out);
    }
    fs::rename(tmp, path);
  }
  std::cout << nlohmann::json{{"inserted", inserted}, {"total", store->size()}}.dump() << "\n";
}

}  // namespace

void register_store(CLI::App& app) {
  auto opt = std::make_shared<StoreOptions>();
  auto* cmd = app.add_subcommand("store", "Export or import articles as JSON Lines");
  cmd->require_subcommand(1);
  auto* exp = cmd->add_subcommand("export", "Write every article, ordered by id");
  opt->config.add_to(*exp, false);
  exp->add_option("-o,--out", opt->file, "Output file (default stdout)");
  exp->callback([opt] { run_export(*opt); });
  auto* imp = cmd->add_subcommand("import", "Insert articles with duplicate detection");
  opt->config.add_to(*imp, false);
  imp->add_option("-i,--in", opt->file, "Input file (default stdin)");
  imp->callback([opt] { run_import(*opt); });
}

}  // namespace newsdesk::cli
