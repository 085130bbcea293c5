#include "common.hpp"

#include <csignal>
#include <fstream>
#include <iostream>
#include <thread>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::cli {

std::atomic<bool> g_stop{false};

namespace {
extern "C" void on_signal(int) { g_stop.store(true); }
}  // namespace

void install_signal_handlers() {
  struct sigaction sa {};
  sa.sa_handler = on_signal;
  sigemptyset(&sa.sa_mask);
  sigaction(SIGINT, &sa, nullptr);
  sigaction(SIGTERM, &sa, nullptr);
}

void wait_for_signal() {
  while (!g_stop.load()) std::this_thread::sleep_for(std::chrono::milliseconds(200));
}

Timestamp now_utc() {
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << content;
}

void ConfigFlags::add_to(CLI::App& app, bool with_inputs) {
  app.add_option("-c,--config", config, "Pipeline config file (JSON)")->check(CLI::ExistingFile);
  app.add_option("--store", store, "Article store (.db for SQLite, otherwise JSON Lines)");
  app.add_option("--data-dir", data_dir, "State directory for the store and queue");
  if (!with_inputs) return;
  app.add_option("--sources", sources, "Media and feeds registry (JSON)")->check(CLI::ExistingFile);
  app.add_option("--claims", claims, "Claims file (JSON)")->check(CLI::ExistingFile);
  app.add_option("--labels", labels, "Operator factuality/bias labels (CSV)")->check(CLI::ExistingFile);
  app.add_option("--citations", citations, "User citation counts (CSV)")->check(CLI::ExistingFile);
}

pipeline::PipelineConfig ConfigFlags::resolve() const {
  auto c = config.empty() ? pipeline::PipelineConfig::defaults()
                          : pipeline::PipelineConfig::load(config);
  if (!data_dir.empty()) c.data_dir = data_dir;
  if (!store.empty()) c.store_path = store;
  if (!sources.empty()) c.sources_path = sources;
  if (!claims.empty()) c.claims_path = claims;
  if (!labels.empty()) c.labels_path = labels;
  if (!citations.empty()) c.citations_path = citations;
  return c;
}

void ApiFlags::add_to(CLI::App& app) {
  app.add_option("--host", host, "Bind address (default 127.0.0.1, env NEWSDESK_API_HOST)");
  app.add_option("--port", port, "Port (default 8080, env NEWSDESK_API_PORT)")
      ->check(CLI::Range(0, 65535));
  app.add_option("--static-dir", static_dir, "Directory of web assets served at /")
      ->check(CLI::ExistingDirectory);
}

void ApiFlags::apply(pipeline::PipelineConfig& config) const {
  if (!host.empty()) config.api_host = host;
  if (port >= 0) config.api_port = port;
  if (!static_dir.empty()) config.static_dir = static_dir;
}

}  // namespace newsdesk::cli
