#include "newsdesk/pipeline/pipeline.hpp"

#include <fstream>

#include <spdlog/spdlog.h>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/ingest/extract.hpp"
#include "newsdesk/ingest/translator.hpp"

namespace newsdesk::pipeline {

namespace fs = std::filesystem;

namespace {

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

Timestamp system_now() {
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

}  // namespace

AnalysisModels load_models(const PipelineConfig& config) {
  AnalysisModels m;
  if (!config.section_model_path.empty()) {
    m.section = std::make_shared<classifiers::SectionClassifier>(
        classifiers::SectionClassifier::from_json(read_json(config.section_model_path)));
  }
  if (!config.propaganda_model_path.empty()) {
    m.propaganda = std::make_shared<classifiers::PropagandaScorer>(
        classifiers::LinearModel::load(config.propaganda_model_path));
  }
  m.frames = std::make_shared<classifiers::KeywordFrameBaseline>();
  m.stance = std::make_shared<classifiers::StanceClassifier>();
  if (!config.claims_path.empty()) m.claims = profiles::load_claims(config.claims_path);
  return m;
}

AnalyticsInputs load_analytics_inputs(const PipelineConfig& config) {
  AnalyticsInputs in;
  in.registry = config.sources_path.empty()
                    ? std::make_shared<ingest::SourceRegistry>()
                    : std::make_shared<ingest::SourceRegistry>(
                          ingest::SourceRegistry::load(config.sources_path));
  if (!config.claims_path.empty()) in.claims = profiles::load_claims(config.claims_path);
  if (!config.citations_path.empty()) {
    in.citations = profiles::aggregate_citations(profiles::load_citations_csv(config.citations_path));
  }
  if (!config.labels_path.empty()) {
    in.labels = classifiers::load_labels_csv(config.labels_path);
    in.source_training = classifiers::TrainConfig{};
  }
  in.valence = config.valence;
  return in;
}

Pipeline::Pipeline(PipelineConfig config, std::unique_ptr<ingest::Fetcher> fetcher,
                   std::function<Timestamp()> clock)
    : config_(std::move(config)),
      clock_(clock ? std::move(clock) : system_now),
      fetcher_(fetcher ? std::move(fetcher) : std::make_unique<ingest::HttpFetcher>()) {
  fs::create_directories(config_.data_dir);
  const auto store_path = config_.effective_store_path();
  if (store_path.has_parent_path()) fs::create_directories(store_path.parent_path());
  store_ = ingest::open_store(store_path);
  queue_ = std::make_unique<DurableLog>(config_.effective_queue_dir(), config_.durability);

  auto inputs = load_analytics_inputs(config_);
  if (!config_.sources_path.empty()) {
    watcher_ = std::make_unique<ingest::SourceConfigWatcher>(config_.sources_path);
    deps_.sources = ingest::lookup_in(*watcher_);
    inputs.registry = watcher_->current();
  } else {
    static_registry_ = inputs.registry;
    deps_.sources = ingest::lookup_in(static_registry_);
  }
  deps_.fetcher = fetcher_.get();
  deps_.store = store_.get();
  deps_.extractor = std::make_shared<ingest::ParagraphBlockExtractor>();
  deps_.translator = std::make_shared<ingest::IdentityTranslator>();
  deps_.clock = clock_;
  deps_.models = load_models(config_);

  StageSettings settings;
  settings.parallelism = config_.parallelism;
  settings.max_retries = config_.max_retries;
  settings.batch_size = config_.batch_size;
  stages_ = article_stages(deps_, settings);
  for (const auto& s : stages_) ensure_topics(*queue_, s);

  analytics_ = std::make_unique<Analytics>(*store_, std::move(inputs), config_.clustering);
}

Pipeline::~Pipeline() { stop(); }

std::shared_ptr<const ingest::SourceRegistry> Pipeline::registry() const {
  return watcher_ ? watcher_->current() : static_registry_;
}

void Pipeline::start() {
  if (started()) return;
  for (const auto& s : stages_) running_.push_back(run_stage(*queue_, s));
  jobs_.push_back(std::make_unique<PeriodicJob>(
      "feeds", config_.feed_check_interval, [this] {
        if (watcher_ && watcher_->poll()) {
          spdlog::info("sources reloaded");
          analytics_->set_registry(watcher_->current());
        }
        enqueue_due_feeds();
      }));
  jobs_.push_back(std::make_unique<PeriodicJob>(
      "clustering", config_.clustering_interval, [this] { analytics_->run_clustering(clock_()); }));
  jobs_.push_back(std::make_unique<PeriodicJob>(
      "offline", config_.offline_interval, [this] { analytics_->run_offline(clock_()); }));
  spdlog::info("pipeline started: {} stages", running_.size());
}

void Pipeline::stop() {
  for (auto& j : jobs_) j->stop();
  jobs_.clear();
  for (auto& s : running_) s->stop();
  running_.clear();
}

std::size_t Pipeline::run_until_idle() {
  std::size_t total = 0;
  for (;;) {
    std::size_t pass = 0;
    for (const auto& s : stages_) pass += StageRunner(*queue_, s).run_until_idle();
    if (pass == 0) return total;
    total += pass;
  }
}

void Pipeline::enqueue_feed(const std::string& feed_id) {
  queue_->publish(topics::kFetchRequests, fetch_request(feed_id));
  std::lock_guard lock(feeds_mu_);
  last_enqueued_[feed_id] = clock_();
}

std::size_t Pipeline::enqueue_due_feeds() {
  const auto reg = registry();
  if (!reg) return 0;
  const auto now = clock_();
  std::vector<std::string> due;
  {
    std::lock_guard lock(feeds_mu_);
    for (const auto& f : reg->feeds()) {
      auto it = last_enqueued_.find(f.id);
      if (it == last_enqueued_.end() || now - it->second >= f.poll_interval) {
        due.push_back(f.id);
        last_enqueued_[f.id] = now;
      }
    }
  }
  for (const auto& id : due) queue_->publish(topics::kFetchRequests, fetch_request(id));
  return due.size();
}

std::map<std::string, Offset> Pipeline::lag() const {
  std::map<std::string, Offset> out;
  for (const auto& s : stages_) out[s.name] = queue_->lag(s.input_topic, s.name);
  return out;
}

}  // namespace newsdesk::pipeline
