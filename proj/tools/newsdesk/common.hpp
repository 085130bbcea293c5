#pragma once

#include <atomic>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "newsdesk/pipeline/config.hpp"

namespace newsdesk::cli {

/// Config file (when given), then environment, then command line flags.
struct ConfigFlags {
  std::string config;
  std::string store;
  std::string data_dir;
  std::string sources;
  std::string claims;
  std::string labels;
  std::string citations;

  void add_to(CLI::App& app, bool with_inputs = true);
  pipeline::PipelineConfig resolve() const;
};

struct ApiFlags {
  std::string host;
  int port = -1;
  std::string static_dir;

  void add_to(CLI::App& app);
  void apply(pipeline::PipelineConfig& config) const;
};

/// Set by SIGINT / SIGTERM.
extern std::atomic<bool> g_stop;
void install_signal_handlers();
void wait_for_signal();

Timestamp now_utc();

/// Writes to `path`, or stdout when empty or "-".
void write_output(const std::string& path, const std::string& content);

void register_serve(CLI::App& app);
void register_pipeline(CLI::App& app);
void register_cluster_eval(CLI::App& app);
void register_store(CLI::App& app);
void register_train(CLI::App& app);
void register_profiles(CLI::App& app);

}  // namespace newsdesk::cli
