#include "newsdesk/profiles/snapshot.hpp"

#include <algorithm>
#include <set>

namespace newsdesk::profiles {

const Article* AnalyticsSnapshot::find_article(const ArticleId& id) const {
  auto it = article_index.find(id);
  return it == article_index.end() ? nullptr : &articles[it->second];
}

std::map<MediumId, MediaProfile> build_profiles(const SnapshotInputs& inputs) {
  std::set<MediumId> media;
  if (inputs.registry) {
    for (const auto& m : inputs.registry->media()) media.insert(m.id);
  }
  for (const auto& a : inputs.articles) media.insert(a.medium_id);

  ProfileInputs pin;
  pin.registry = inputs.registry.get();
  pin.articles = inputs.articles;
  pin.claims = inputs.claims;
  pin.citations = inputs.citations;
  pin.labels = &inputs.labels;
  pin.classifier = inputs.classifier;
  pin.valence = inputs.valence;
  std::map<MediumId, MediaProfile> out;
  for (const auto& id : media) out.emplace(id, build_media_profile(id, pin));
  return out;
}

std::shared_ptr<const AnalyticsSnapshot> compose_snapshot(
    std::vector<Article> articles, std::shared_ptr<const ingest::SourceRegistry> registry,
    std::vector<Claim> claims, clustering::ClusteringResult clustering,
    std::map<MediumId, MediaProfile> profiles, Timestamp built_at) {
  auto snap = std::make_shared<AnalyticsSnapshot>();
  snap->articles = std::move(articles);
  std::sort(snap->articles.begin(), snap->articles.end(),
            [](const Article& a, const Article& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < snap->articles.size(); ++i) {
    snap->article_index.emplace(snap->articles[i].id, i);
  }
  snap->registry = registry ? std::move(registry) : std::make_shared<ingest::SourceRegistry>();
  snap->claims = std::move(claims);
  snap->clustering = std::move(clustering);
  snap->profiles = std::move(profiles);
  snap->built_at = built_at;
  snap->topics = build_all_topic_stats(snap->clustering, snap->articles, snap->registry.get());
  return snap;
}

std::shared_ptr<const AnalyticsSnapshot> build_snapshot(SnapshotInputs inputs,
                                                        clustering::ClusteringResult clustering,
                                                        Timestamp built_at) {
  auto profiles = build_profiles(inputs);
  return compose_snapshot(std::move(inputs.articles), std::move(inputs.registry),
                          std::move(inputs.claims), std::move(clustering), std::move(profiles),
                          built_at);
}

SnapshotHolder::SnapshotHolder() {
  auto empty = std::make_shared<AnalyticsSnapshot>();
  empty->registry = std::make_shared<ingest::SourceRegistry>();
  current_ = std::move(empty);
}

std::shared_ptr<const AnalyticsSnapshot> SnapshotHolder::current() const {
  std::lock_guard lock(mutex_);
  return current_;
}

void SnapshotHolder::publish(std::shared_ptr<const AnalyticsSnapshot> snapshot) {
  std::lock_guard lock(mutex_);
  current_ = std::move(snapshot);
  ++version_;
}

std::uint64_t SnapshotHolder::version() const {
  std::lock_guard lock(mutex_);
  return version_;
}

}  // namespace newsdesk::profiles
