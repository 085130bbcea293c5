#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "newsdesk/clustering/corpus.hpp"
#include "newsdesk/profiles/media_profile.hpp"
#include "newsdesk/profiles/topic_stats.hpp"

namespace newsdesk::profiles {

/// Everything the read side serves, built in one go and never mutated after
/// publication.
struct AnalyticsSnapshot {
  std::vector<Article> articles;  // sorted by id
  std::unordered_map<ArticleId, std::size_t> article_index;
  clustering::ClusteringResult clustering;
  std::map<MediumId, MediaProfile> profiles;
  std::map<std::string, TopicStats> topics;  // by story id
  std::vector<Claim> claims;
  std::shared_ptr<const ingest::SourceRegistry> registry;
  Timestamp built_at{};

  const Article* find_article(const ArticleId& id) const;
};

struct SnapshotInputs {
  std::vector<Article> articles;
  std::shared_ptr<const ingest::SourceRegistry> registry;
  std::vector<Claim> claims;
  std::vector<GroupCitationCounts> citations;
  std::map<MediumId, classifiers::MediumLabels> labels;
  const classifiers::SourceClassifier* classifier = nullptr;
  ValenceConfig valence;
};

/// Profiles for every medium in the registry or among the articles.
std::map<MediumId, MediaProfile> build_profiles(const SnapshotInputs& inputs);

/// Assembles a snapshot from precomputed profiles and clustering; topic
/// stats are computed here for every story.
std::shared_ptr<const AnalyticsSnapshot> compose_snapshot(
    std::vector<Article> articles, std::shared_ptr<const ingest::SourceRegistry> registry,
    std::vector<Claim> claims, clustering::ClusteringResult clustering,
    std::map<MediumId, MediaProfile> profiles, Timestamp built_at);

/// build_profiles followed by compose_snapshot.
std::shared_ptr<const AnalyticsSnapshot> build_snapshot(SnapshotInputs inputs,
                                                        clustering::ClusteringResult clustering,
                                                        Timestamp built_at);

/// Last published snapshot; publishing swaps the pointer so readers keep the
/// one they already hold.
class SnapshotHolder {
 public:
  SnapshotHolder();
  std::shared_ptr<const AnalyticsSnapshot> current() const;
  void publish(std::shared_ptr<const AnalyticsSnapshot> snapshot);
  std::uint64_t version() const;

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const AnalyticsSnapshot> current_;
  std::uint64_t version_ = 0;
};

}  // namespace newsdesk::profiles
