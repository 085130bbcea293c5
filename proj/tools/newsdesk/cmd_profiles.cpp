#include <iostream>

#include <nlohmann/json.hpp>

#include "common.hpp"
#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/time.hpp"
#include "newsdesk/pipeline/pipeline.hpp"

namespace newsdesk::cli {

namespace {

struct ProfileOptions {
  ConfigFlags config;
  std::vector<std::string> media;
  bool topics = false;
  std::string now;
  std::string out;
};

void run_profiles(const ProfileOptions& opt) {
  const auto config = opt.config.resolve();
  Timestamp now = now_utc();
  if (!opt.now.empty()) {
    const auto t = parse_iso8601(opt.now);
    if (!t) throw ConfigError("--now is not an RFC 3339 timestamp: " + opt.now);
    now = *t;
  }
  auto store = ingest::open_store(config.effective_store_path());
  pipeline::Analytics analytics(*store, pipeline::load_analytics_inputs(config), config.clustering);
  analytics.refresh(now);
  const auto snap = analytics.snapshots().current();

  nlohmann::json profiles = nlohmann::json::object();
  if (opt.media.empty()) {
    for (const auto& [id, p] : snap->profiles) profiles[id] = to_json(p);
  } else {
    for (const auto& id : opt.media) {
      auto it = snap->profiles.find(id);
      if (it == snap->profiles.end()) throw NotFound("unknown medium '" + id + "'");
      profiles[id] = to_json(it->second);
    }
  }
  nlohmann::json out{{"built_at", format_iso8601(snap->built_at)}, {"profiles", std::move(profiles)}};
  if (opt.topics) {
    nlohmann::json topics = nlohmann::json::array();
    for (const auto& [id, t] : snap->topics) topics.push_back(to_json(t));
    out["topics"] = std::move(topics);
  }
  write_output(opt.out, out.dump(2) + "\n");
}

}  // namespace

void register_profiles(CLI::App& app) {
  auto opt = std::make_shared<ProfileOptions>();
  auto* cmd = app.add_subcommand("profiles", "Compute media profiles (and topic stats) from a store");
  opt->config.add_to(*cmd);
  cmd->add_option("-m,--medium", opt->media, "Only these media ids");
  cmd->add_flag("--topics", opt->topics, "Include per-story topic statistics");
  cmd->add_option("--now", opt->now, "Reference time for clustering (default: now)");
  cmd->add_option("-o,--out", opt->out, "Output file (default stdout)");
  cmd->callback([opt] { run_profiles(*opt); });
}

}  // namespace newsdesk::cli
