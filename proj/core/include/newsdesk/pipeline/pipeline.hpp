#pragma once

#include <map>
#include <memory>
#include <vector>

#include "newsdesk/ingest/fetch.hpp"
#include "newsdesk/ingest/sources.hpp"
#include "newsdesk/pipeline/analytics.hpp"
#include "newsdesk/pipeline/config.hpp"
#include "newsdesk/pipeline/scheduler.hpp"
#include "newsdesk/pipeline/stages.hpp"

namespace newsdesk::pipeline {

/// Wires store, queue, stages, schedules and analytics from a config.
class Pipeline {
 public:
  /// `fetcher` defaults to an HttpFetcher; `clock` to the system clock.
  explicit Pipeline(PipelineConfig config, std::unique_ptr<ingest::Fetcher> fetcher = nullptr,
                    std::function<Timestamp()> clock = nullptr);
  ~Pipeline();
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  /// Stage threads plus the feed, clustering and offline schedules.
  void start();
  void stop();
  bool started() const noexcept { return !running_.empty(); }

  /// Drains every stage in order until the whole graph is idle.
  std::size_t run_until_idle();

  /// Publishes fetch requests for feeds whose poll interval has elapsed.
  std::size_t enqueue_due_feeds();
  void enqueue_feed(const std::string& feed_id);

  /// Lag of each stage's consumer group on its input topic.
  std::map<std::string, Offset> lag() const;

  const PipelineConfig& config() const noexcept { return config_; }
  MessageQueue& queue() noexcept { return *queue_; }
  ingest::ArticleStore& store() noexcept { return *store_; }
  Analytics& analytics() noexcept { return *analytics_; }
  const std::vector<StageDescriptor>& stages() const noexcept { return stages_; }
  std::shared_ptr<const ingest::SourceRegistry> registry() const;

 private:
  PipelineConfig config_;
  std::function<Timestamp()> clock_;
  std::unique_ptr<ingest::Fetcher> fetcher_;
  std::unique_ptr<ingest::ArticleStore> store_;
  std::unique_ptr<DurableLog> queue_;
  std::unique_ptr<ingest::SourceConfigWatcher> watcher_;
  std::shared_ptr<const ingest::SourceRegistry> static_registry_;
  StageDeps deps_;
  std::vector<StageDescriptor> stages_;
  std::unique_ptr<Analytics> analytics_;
  std::vector<std::unique_ptr<RunningStage>> running_;
  std::vector<std::unique_ptr<PeriodicJob>> jobs_;
  std::mutex feeds_mu_;
  std::map<std::string, Timestamp> last_enqueued_;
};

/// Everything an offline reader needs from a config: registry, claims,
/// citations and labels files (each optional).
AnalyticsInputs load_analytics_inputs(const PipelineConfig& config);

/// Models named in the config plus the lexical baselines.
AnalysisModels load_models(const PipelineConfig& config);

}  // namespace newsdesk::pipeline
