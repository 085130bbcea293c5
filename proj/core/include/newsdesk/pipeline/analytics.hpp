#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "newsdesk/classifiers/source_classifier.hpp"
#include "newsdesk/clustering/corpus.hpp"
#include "newsdesk/ingest/store.hpp"
#include "newsdesk/profiles/snapshot.hpp"

namespace newsdesk::pipeline {

struct AnalyticsInputs {
  std::shared_ptr<const ingest::SourceRegistry> registry;
  std::vector<profiles::Claim> claims;
  std::vector<profiles::GroupCitationCounts> citations;
  std::map<MediumId, classifiers::MediumLabels> labels;
  /// Trains a factuality/bias model from `labels` on every offline run when
  /// set; media without file labels then get predictions.
  std::optional<classifiers::TrainConfig> source_training;
  profiles::ValenceConfig valence;
};

/// The offline side: clustering batches and profile aggregation over store
/// snapshots, published through a SnapshotHolder. Both jobs serialize on one
/// lock, so the story set has a single writer.
class Analytics {
 public:
  Analytics(const ingest::ArticleStore& store, AnalyticsInputs inputs,
            clustering::ClusteringParams params);

  /// Clusters the current store and publishes a snapshot that keeps the last
  /// computed profiles.
  void run_clustering(Timestamp now);
  /// Recomputes profiles and publishes a snapshot that keeps the last
  /// clustering.
  void run_offline(Timestamp now);
  /// Both, in that order.
  void refresh(Timestamp now);

  /// Used from the next run on.
  void set_registry(std::shared_ptr<const ingest::SourceRegistry> registry);

  profiles::SnapshotHolder& snapshots() noexcept { return holder_; }
  std::uint64_t clustering_runs() const noexcept { return clustering_runs_; }

 private:
  void publish_locked(std::vector<Article> articles, Timestamp now);

  const ingest::ArticleStore& store_;
  AnalyticsInputs inputs_;
  clustering::ClusteringEngine engine_;
  std::mutex mu_;
  clustering::ClusteringResult last_clustering_;
  std::map<MediumId, profiles::MediaProfile> last_profiles_;
  profiles::SnapshotHolder holder_;
  std::uint64_t clustering_runs_ = 0;
};

}  // namespace newsdesk::pipeline
