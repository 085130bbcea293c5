#include <signal.h>
#include <unistd.h>

#include <cerrno>
#include <fstream>
#include <iostream>
#include <thread>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "common.hpp"
#include "newsdesk/api/server.hpp"
#include "newsdesk/common/errors.hpp"
#include "newsdesk/pipeline/pipeline.hpp"

namespace fs = std::filesystem;

namespace newsdesk::cli {

namespace {

struct PipelineOptions {
  ConfigFlags config;
  ApiFlags api;
  bool no_api = false;
  int stop_timeout = 30;
  std::string topic;
  std::string group;
  std::uint64_t offset = 0;
  std::vector<std::string> feeds;
};

fs::path pid_file(const pipeline::PipelineConfig& c) { return c.data_dir / "newsdesk.pid"; }

std::optional<pid_t> read_pid(const fs::path& path) {
  std::ifstream in(path);
  long pid = 0;
  if (!(in >> pid) || pid <= 0) return std::nullopt;
  return static_cast<pid_t>(pid);
}

bool alive(pid_t pid) { return ::kill(pid, 0) == 0 || errno == EPERM; }

class PidFile {
 public:
  explicit PidFile(fs::path path) : path_(std::move(path)) {
    if (auto pid = read_pid(path_); pid && alive(*pid)) {
      throw ConfigError("pipeline already running (pid " + std::to_string(*pid) + ", " +
                        path_.string() + ")");
    }
    fs::create_directories(path_.parent_path());
    std::ofstream(path_) << ::getpid() << "\n";
  }
  ~PidFile() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  PidFile(const PidFile&) = delete;
  PidFile& operator=(const PidFile&) = delete;

 private:
  fs::path path_;
};

void run_start(const PipelineOptions& opt) {
  auto config = opt.config.resolve();
  opt.api.apply(config);
  PidFile pid(pid_file(config));
  pipeline::Pipeline p(config);
  p.analytics().refresh(now_utc());
  p.start();
  spdlog::info("pipeline started: {} stages, data in {}", p.stages().size(), config.data_dir.string());

  std::unique_ptr<api::ApiServer> server;
  if (!opt.no_api) {
    api::ServerOptions so;
    so.host = config.api_host;
    so.port = config.api_port;
    so.static_dir = config.static_dir;
    server = std::make_unique<api::ApiServer>(p.analytics().snapshots(), so);
    spdlog::info("api on http://{}:{}", config.api_host, server->start());
  }
  install_signal_handlers();
  wait_for_signal();
  spdlog::info("stopping pipeline");
  if (server) server->stop();
  p.stop();
}

void run_stop(const PipelineOptions& opt) {
  const auto config = opt.config.resolve();
  const auto path = pid_file(config);
  const auto pid = read_pid(path);
  if (!pid || !alive(*pid)) {
    std::error_code ec;
    fs::remove(path, ec);
    throw NotFound("no running pipeline for " + config.data_dir.string());
  }
  if (::kill(*pid, SIGTERM) != 0) throw ConfigError("cannot signal pid " + std::to_string(*pid));
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(opt.stop_timeout);
  while (alive(*pid)) {
    if (std::chrono::steady_clock::now() > deadline) {
      throw ConfigError("pid " + std::to_string(*pid) + " did not exit within " +
                        std::to_string(opt.stop_timeout) + "s");
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  std::cout << "stopped " << *pid << "\n";
}

void run_once(const PipelineOptions& opt) {
  const auto config = opt.config.resolve();
  PidFile pid(pid_file(config));
  pipeline::Pipeline p(config);
  std::size_t requested = 0;
  if (opt.feeds.empty()) {
    requested = p.enqueue_due_feeds();
  } else {
    for (const auto& f : opt.feeds) p.enqueue_feed(f);
    requested = opt.feeds.size();
  }
  const auto processed = p.run_until_idle();
  nlohmann::json out{{"feeds_requested", requested},
                     {"messages_processed", processed},
                     {"articles", p.store().size()}};
  std::cout << out.dump(2) << "\n";
}

pipeline::DurableLog open_queue(const pipeline::PipelineConfig& config) {
  const auto dir = config.effective_queue_dir();
  if (!fs::is_directory(dir)) throw NotFound("no queue at " + dir.string());
  return pipeline::DurableLog(dir, config.durability);
}

void run_lag(const PipelineOptions& opt) {
  const auto config = opt.config.resolve();
  auto queue = open_queue(config);
  nlohmann::json out = nlohmann::json::object();
  for (const auto& t : pipeline::stage_topology()) {
    nlohmann::json row{{"topic", t.input_topic}};
    if (queue.has_topic(t.input_topic)) {
      const auto end = queue.end_offset(t.input_topic);
      const auto committed = queue.committed(t.input_topic, t.name);
      row["end"] = end;
      row["committed"] = committed;
      row["lag"] = end - committed;
    }
    const auto dead = t.name + ".dead";
    row["dead_lettered"] = queue.has_topic(dead) ? queue.end_offset(dead) : 0;
    out[t.name] = std::move(row);
  }
  std::cout << out.dump(2) << "\n";
}

void run_replay(const PipelineOptions& opt) {
  const auto config = opt.config.resolve();
  std::string group = opt.group;
  if (group.empty()) {
    for (const auto& t : pipeline::stage_topology()) {
      if (t.input_topic == opt.topic) group = t.name;
    }
    if (group.empty()) throw ConfigError("no stage consumes '" + opt.topic + "'; pass --group");
  }
  if (auto pid = read_pid(pid_file(config)); pid && alive(*pid)) {
    throw ConfigError("stop the running pipeline (pid " + std::to_string(*pid) + ") before replaying");
  }
  auto queue = open_queue(config);
  const auto before = queue.committed(opt.topic, group);
  queue.seek(opt.topic, group, opt.offset);
  std::cout << nlohmann::json{{"topic", opt.topic},
                              {"group", group},
                              {"from", before},
                              {"to", opt.offset},
                              {"end", queue.end_offset(opt.topic)}}
                   .dump(2)
            << "\n";
}

}  // namespace

void register_pipeline(CLI::App& app) {
  auto opt = std::make_shared<PipelineOptions>();
  auto* cmd = app.add_subcommand("pipeline", "Run and operate the ingestion pipeline");
  cmd->require_subcommand(1);

  auto* start = cmd->add_subcommand("start", "Run stages, schedules and the API until SIGINT/SIGTERM");
  opt->config.add_to(*start);
  opt->api.add_to(*start);
  start->add_flag("--no-api", opt->no_api, "Do not serve the read API");
  start->callback([opt] { run_start(*opt); });

  auto* stop = cmd->add_subcommand("stop", "Signal the pipeline running on this data directory");
  opt->config.add_to(*stop, false);
  stop->add_option("--timeout", opt->stop_timeout, "Seconds to wait for exit")->capture_default_str();
  stop->callback([opt] { run_stop(*opt); });

  auto* once = cmd->add_subcommand("run-once", "Fetch due (or named) feeds and drain every stage");
  opt->config.add_to(*once);
  once->add_option("--feed", opt->feeds, "Feed id to fetch regardless of its schedule");
  once->callback([opt] { run_once(*opt); });

  auto* lag = cmd->add_subcommand("lag", "Per-stage consumer lag and dead-letter counts");
  opt->config.add_to(*lag, false);
  lag->callback([opt] { run_lag(*opt); });

  auto* replay = cmd->add_subcommand("replay", "Move a consumer group's committed offset");
  opt->config.add_to(*replay, false);
  replay->add_option("--topic", opt->topic, "Topic to replay")->required();
  replay->add_option("--group", opt->group, "Consumer group (default: the stage reading --topic)");
  replay->add_option("--offset", opt->offset, "Next offset to consume")->required();
  replay->callback([opt] { run_replay(*opt); });
}

}  // namespace newsdesk::cli
