#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "newsdesk/clustering/params.hpp"
#include "newsdesk/pipeline/queue.hpp"
#include "newsdesk/profiles/valence.hpp"

namespace newsdesk::pipeline {

/// Pipeline configuration file (JSON). Relative paths are resolved against
/// the directory of the file. Example:
///
///   {"data_dir": "data",
///    "store": "data/articles.db",
///    "sources": "sources.json", "claims": "claims.json",
///    "labels": "labels.csv", "citations": "citations.csv",
///    "models": {"section": "section.json", "propaganda": "propaganda.json"},
///    "api": {"host": "127.0.0.1", "port": 8080, "static_dir": "web"},
///    "stages": {"ingest": {"parallelism": 2}},
///    "max_retries": 3, "batch_size": 32, "durability": "fsync",
///    "schedules": {"clustering_minutes": 30, "offline_hours": 24,
///                  "feed_check_seconds": 60},
///    "clustering": {"window_days": 6, "window_overlap_days": 3, "t1": 0.31, "t2": 0.8},
///    "valence": {"min_citations": 10, "c0_is_right": true}}
///
/// Environment overrides: NEWSDESK_STORE_PATH, NEWSDESK_API_HOST,
/// NEWSDESK_API_PORT.
struct PipelineConfig {
  std::filesystem::path data_dir = "newsdesk-data";
  std::filesystem::path store_path;  // default data_dir/articles.db
  std::filesystem::path queue_dir;   // default data_dir/queue
  std::filesystem::path sources_path;
  std::filesystem::path claims_path;
  std::filesystem::path labels_path;
  std::filesystem::path citations_path;
  std::filesystem::path section_model_path;
  std::filesystem::path propaganda_model_path;
  std::filesystem::path static_dir;
  std::string api_host = "127.0.0.1";
  int api_port = 8080;
  std::map<std::string, std::size_t> parallelism;
  std::size_t max_retries = 3;
  std::size_t batch_size = 32;
  Durability durability = Durability::fsync;
  std::chrono::seconds clustering_interval{30 * 60};
  std::chrono::seconds offline_interval{24 * 3600};
  std::chrono::seconds feed_check_interval{60};
  clustering::ClusteringParams clustering;
  profiles::ValenceConfig valence;

  /// Throws ConfigError.
  static PipelineConfig from_json(const nlohmann::json& j,
                                  const std::filesystem::path& base_dir = ".");
  /// Reads the file and applies the environment overrides.
  static PipelineConfig load(const std::filesystem::path& path);
  /// Defaults plus environment overrides.
  static PipelineConfig defaults();

  void apply_environment();
  nlohmann::json to_json() const;

  std::filesystem::path effective_store_path() const;
  std::filesystem::path effective_queue_dir() const;
};

}  // namespace newsdesk::pipeline
