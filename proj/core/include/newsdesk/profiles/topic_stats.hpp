#pragma once

#include <map>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "newsdesk/clustering/corpus.hpp"
#include "newsdesk/ingest/sources.hpp"

namespace newsdesk::profiles {

struct CountryCoverage {
  std::size_t articles = 0;
  /// Topic articles over all articles from the country.
  double ratio = 0.0;

  friend bool operator==(const CountryCoverage&, const CountryCoverage&) = default;
};

struct MediumCoverage {
  std::size_t articles = 0;
  std::size_t propagandistic_articles = 0;  // likely or very_likely
  double propagandistic_ratio = 0.0;        // over `articles`

  friend bool operator==(const MediumCoverage&, const MediumCoverage&) = default;
};

/// Statistics for one story.
struct TopicStats {
  std::string topic_id;
  std::string slug;
  std::string title;
  std::size_t article_count = 0;
  std::size_t propagandistic_articles = 0;
  std::map<std::string, CountryCoverage> countries;  // "unknown" when not in the registry
  std::map<MediumId, MediumCoverage> media;
  std::map<PropagandaLabel, double> propaganda_distribution;
  std::map<FrameLabel, double> frame_distribution;

  friend bool operator==(const TopicStats&, const TopicStats&) = default;
};

nlohmann::json to_json(const TopicStats& s);

bool is_propagandistic(PropagandaLabel label) noexcept;

/// `topic` is a story id or slug. Throws NotFound for an unknown topic.
TopicStats build_topic_stats(std::string_view topic, const clustering::ClusteringResult& stories,
                             std::span<const Article> articles,
                             const ingest::SourceRegistry* registry = nullptr);

/// Stats for every story in one pass over the articles; equal to calling
/// build_topic_stats per story.
std::map<std::string, TopicStats> build_all_topic_stats(const clustering::ClusteringResult& stories,
                                                        std::span<const Article> articles,
                                                        const ingest::SourceRegistry* registry = nullptr);

}  // namespace newsdesk::profiles
