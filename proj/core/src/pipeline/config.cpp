#include "newsdesk/pipeline/config.hpp"

#include <cstdlib>
#include <fstream>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::pipeline {

namespace fs = std::filesystem;

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
  if (p.empty()) return {};
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::string path_string(const fs::path& p) { return p.empty() ? std::string() : p.string(); }

template <typename T>
T positive(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  const auto v = j.at(key).get<double>();
  if (!(v > 0)) throw ConfigError(std::string("pipeline config: ") + key + " must be positive");
  return static_cast<T>(v);
}

}  // namespace

PipelineConfig PipelineConfig::from_json(const nlohmann::json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("pipeline config must be a JSON object");
  PipelineConfig c;
  try {
    auto str = [&](const nlohmann::json& o, const char* key) {
      return o.contains(key) ? o.at(key).get<std::string>() : std::string();
    };
    if (j.contains("data_dir")) c.data_dir = resolve(base_dir, str(j, "data_dir"));
    else c.data_dir = base_dir / c.data_dir;
    c.store_path = resolve(base_dir, str(j, "store"));
    c.queue_dir = resolve(base_dir, str(j, "queue_dir"));
    c.sources_path = resolve(base_dir, str(j, "sources"));
    c.claims_path = resolve(base_dir, str(j, "claims"));
    c.labels_path = resolve(base_dir, str(j, "labels"));
    c.citations_path = resolve(base_dir, str(j, "citations"));
    if (j.contains("models")) {
      const auto& m = j.at("models");
      c.section_model_path = resolve(base_dir, str(m, "section"));
      c.propaganda_model_path = resolve(base_dir, str(m, "propaganda"));
    }
    if (j.contains("api")) {
      const auto& a = j.at("api");
      c.api_host = a.value("host", c.api_host);
      c.api_port = a.value("port", c.api_port);
      c.static_dir = resolve(base_dir, str(a, "static_dir"));
    }
    if (j.contains("stages")) {
      for (const auto& [name, s] : j.at("stages").items()) {
        c.parallelism[name] = positive<std::size_t>(s, "parallelism", 1);
      }
    }
    if (j.contains("max_retries")) c.max_retries = j.at("max_retries").get<std::size_t>();
    c.batch_size = positive<std::size_t>(j, "batch_size", c.batch_size);
    if (j.contains("durability")) {
      const auto d = j.at("durability").get<std::string>();
      if (d == "fsync") c.durability = Durability::fsync;
      else if (d == "flush") c.durability = Durability::flush;
      else throw ConfigError("pipeline config: durability must be fsync or flush");
    }
    if (j.contains("schedules")) {
      const auto& s = j.at("schedules");
      c.clustering_interval = std::chrono::seconds(
          static_cast<std::int64_t>(positive<double>(s, "clustering_minutes", 30) * 60));
      c.offline_interval = std::chrono::seconds(
          static_cast<std::int64_t>(positive<double>(s, "offline_hours", 24) * 3600));
      c.feed_check_interval =
          std::chrono::seconds(positive<std::int64_t>(s, "feed_check_seconds", 60));
    }
    if (j.contains("clustering")) c.clustering = clustering::params_from_json(j.at("clustering"));
    if (j.contains("valence")) {
      const auto& v = j.at("valence");
      c.valence.min_citations = v.value("min_citations", c.valence.min_citations);
      c.valence.c0_is_right = v.value("c0_is_right", c.valence.c0_is_right);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("pipeline config: ") + e.what());
  }
  if (c.api_port <= 0 || c.api_port > 65535) throw ConfigError("pipeline config: bad api port");
  return c;
}

PipelineConfig PipelineConfig::load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  auto base = path.parent_path();
  if (base.empty()) base = ".";
  auto c = from_json(j, base);
  c.apply_environment();
  return c;
}

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig c;
  c.apply_environment();
  return c;
}

void PipelineConfig::apply_environment() {
  if (const char* v = std::getenv("NEWSDESK_STORE_PATH"); v && *v) store_path = v;
  if (const char* v = std::getenv("NEWSDESK_API_HOST"); v && *v) api_host = v;
  if (const char* v = std::getenv("NEWSDESK_API_PORT"); v && *v) {
    try {
      api_port = std::stoi(v);
    } catch (const std::exception&) {
      throw ConfigError(std::string("NEWSDESK_API_PORT is not a number: ") + v);
    }
    if (api_port <= 0 || api_port > 65535) throw ConfigError("NEWSDESK_API_PORT out of range");
  }
}

nlohmann::json PipelineConfig::to_json() const {
  nlohmann::json stages = nlohmann::json::object();
  for (const auto& [name, n] : parallelism) stages[name] = {{"parallelism", n}};
  return {{"data_dir", path_string(data_dir)},
          {"store", path_string(effective_store_path())},
          {"queue_dir", path_string(effective_queue_dir())},
          {"sources", path_string(sources_path)},
          {"claims", path_string(claims_path)},
          {"labels", path_string(labels_path)},
          {"citations", path_string(citations_path)},
          {"models",
           {{"section", path_string(section_model_path)},
            {"propaganda", path_string(propaganda_model_path)}}},
          {"api", {{"host", api_host}, {"port", api_port}, {"static_dir", path_string(static_dir)}}},
          {"stages", stages},
          {"max_retries", max_retries},
          {"batch_size", batch_size},
          {"durability", durability == Durability::fsync ? "fsync" : "flush"},
          {"schedules",
           {{"clustering_minutes", clustering_interval.count() / 60.0},
            {"offline_hours", offline_interval.count() / 3600.0},
            {"feed_check_seconds", feed_check_interval.count()}}},
          {"clustering", clustering::to_json(clustering)},
          {"valence",
           {{"min_citations", valence.min_citations}, {"c0_is_right", valence.c0_is_right}}}};
}

fs::path PipelineConfig::effective_store_path() const {
  return store_path.empty() ? data_dir / "articles.db" : store_path;
}

fs::path PipelineConfig::effective_queue_dir() const {
  return queue_dir.empty() ? data_dir / "queue" : queue_dir;
}

}  // namespace newsdesk::pipeline
