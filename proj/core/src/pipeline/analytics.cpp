#include "newsdesk/pipeline/analytics.hpp"

#include <spdlog/spdlog.h>

namespace newsdesk::pipeline {

Analytics::Analytics(const ingest::ArticleStore& store, AnalyticsInputs inputs,
                     clustering::ClusteringParams params)
    : store_(store), inputs_(std::move(inputs)), engine_(std::move(params)) {
  if (!inputs_.registry) inputs_.registry = std::make_shared<ingest::SourceRegistry>();
}

void Analytics::set_registry(std::shared_ptr<const ingest::SourceRegistry> registry) {
  std::lock_guard lock(mu_);
  inputs_.registry = registry ? std::move(registry) : std::make_shared<ingest::SourceRegistry>();
}

void Analytics::run_clustering(Timestamp now) {
  std::lock_guard lock(mu_);
  auto articles = store_.all();
  last_clustering_ = engine_.run(articles, now);
  ++clustering_runs_;
  spdlog::info("clustering: {} articles, {} stories", articles.size(),
               last_clustering_.stories.size());
  publish_locked(std::move(articles), now);
}

void Analytics::run_offline(Timestamp now) {
  std::lock_guard lock(mu_);
  profiles::SnapshotInputs in;
  in.articles = store_.all();
  in.registry = inputs_.registry;
  in.claims = inputs_.claims;
  in.citations = inputs_.citations;
  in.labels = inputs_.labels;
  in.valence = inputs_.valence;

  std::optional<classifiers::SourceClassifier> classifier;
  if (inputs_.source_training && !inputs_.labels.empty()) {
    std::map<MediumId, std::vector<Article>> by_medium;
    for (const auto& a : in.articles) by_medium[a.medium_id].push_back(a);
    classifier = classifiers::SourceClassifier::train(inputs_.labels, by_medium,
                                                      *inputs_.source_training);
    in.classifier = &*classifier;
  }
  last_profiles_ = profiles::build_profiles(in);
  spdlog::info("profiles: {} media", last_profiles_.size());
  publish_locked(std::move(in.articles), now);
}

void Analytics::refresh(Timestamp now) {
  run_clustering(now);
  run_offline(now);
}

void Analytics::publish_locked(std::vector<Article> articles, Timestamp now) {
  holder_.publish(profiles::compose_snapshot(std::move(articles), inputs_.registry,
                                             inputs_.claims, last_clustering_, last_profiles_,
                                             now));
}

}  // namespace newsdesk::pipeline
