#include <memory>

#include <spdlog/spdlog.h>

#include "common.hpp"
#include "newsdesk/api/server.hpp"
#include "newsdesk/pipeline/pipeline.hpp"

namespace newsdesk::cli {

namespace {

struct ServeOptions {
  ConfigFlags config;
  ApiFlags api;
  bool once = false;
};

void run_serve(const ServeOptions& opt) {
  auto config = opt.config.resolve();
  opt.api.apply(config);
  auto store = ingest::open_store(config.effective_store_path());
  pipeline::Analytics analytics(*store, pipeline::load_analytics_inputs(config), config.clustering);
  analytics.refresh(now_utc());
  spdlog::info("serving {} articles from {}", store->size(), config.effective_store_path().string());

  std::vector<std::unique_ptr<pipeline::PeriodicJob>> jobs;
  if (!opt.once) {
    jobs.push_back(std::make_unique<pipeline::PeriodicJob>(
        "clustering", config.clustering_interval, [&] { analytics.run_clustering(now_utc()); }, false));
    jobs.push_back(std::make_unique<pipeline::PeriodicJob>(
        "offline", config.offline_interval, [&] { analytics.run_offline(now_utc()); }, false));
  }

  api::ServerOptions server_opt;
  server_opt.host = config.api_host;
  server_opt.port = config.api_port;
  server_opt.static_dir = config.static_dir;
  api::ApiServer server(analytics.snapshots(), server_opt);
  const int port = server.start();
  spdlog::info("listening on http://{}:{}", config.api_host, port);
  install_signal_handlers();
  wait_for_signal();
  spdlog::info("shutting down");
  server.stop();
  for (auto& j : jobs) j->stop();
}

}  // namespace

void register_serve(CLI::App& app) {
  auto opt = std::make_shared<ServeOptions>();
  auto* cmd = app.add_subcommand("serve", "Serve the read API over a store (no crawling)");
  opt->config.add_to(*cmd);
  opt->api.add_to(*cmd);
  cmd->add_flag("--no-schedule", opt->once, "Compute the snapshot once; no periodic recomputation");
  cmd->callback([opt] { run_serve(*opt); });
}

}  // namespace newsdesk::cli
