#include "newsdesk/profiles/topic_stats.hpp"

#include "newsdesk/common/errors.hpp"

namespace newsdesk::profiles {

namespace {

template <typename E>
nlohmann::json enum_map(const std::map<E, double>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : m) j[std::string(to_string(k))] = v;
  return j;
}

std::string country_of(const Article& a, const ingest::SourceRegistry* registry) {
  if (registry) {
    if (const auto* m = registry->find_medium(a.medium_id); m && !m->country.empty()) {
      return m->country;
    }
  }
  return "unknown";
}

}  // namespace

bool is_propagandistic(PropagandaLabel label) noexcept {
  return label == PropagandaLabel::likely || label == PropagandaLabel::very_likely;
}

nlohmann::json to_json(const TopicStats& s) {
  nlohmann::json countries = nlohmann::json::object();
  for (const auto& [c, v] : s.countries) {
    countries[c] = {{"articles", v.articles}, {"ratio", v.ratio}};
  }
  nlohmann::json media = nlohmann::json::object();
  for (const auto& [m, v] : s.media) {
    media[m] = {{"articles", v.articles},
                {"propagandistic_articles", v.propagandistic_articles},
                {"propagandistic_ratio", v.propagandistic_ratio}};
  }
  return {{"topic_id", s.topic_id},
          {"slug", s.slug},
          {"title", s.title},
          {"article_count", s.article_count},
          {"propagandistic_articles", s.propagandistic_articles},
          {"countries", countries},
          {"media", media},
          {"propaganda_distribution", enum_map(s.propaganda_distribution)},
          {"frame_distribution", enum_map(s.frame_distribution)}};
}

namespace {

void add_article(TopicStats& s, const Article& a, const std::string& country,
                 std::size_t& scored, std::size_t& framed) {
  ++s.article_count;
  ++s.countries[country].articles;
  auto& m = s.media[a.medium_id];
  ++m.articles;
  if (a.propaganda) {
    ++scored;
    s.propaganda_distribution[a.propaganda->label] += 1.0;
    if (is_propagandistic(a.propaganda->label)) {
      ++m.propagandistic_articles;
      ++s.propagandistic_articles;
    }
  }
  if (a.frame_distribution) {
    ++framed;
    for (const auto& [f, w] : *a.frame_distribution) s.frame_distribution[f] += w;
  }
}

void finish(TopicStats& s, const std::map<std::string, std::size_t>& country_totals,
            std::size_t scored, std::size_t framed) {
  for (auto& [c, v] : s.countries) {
    v.ratio = static_cast<double>(v.articles) / static_cast<double>(country_totals.at(c));
  }
  for (auto& [id, m] : s.media) {
    m.propagandistic_ratio =
        static_cast<double>(m.propagandistic_articles) / static_cast<double>(m.articles);
  }
  for (auto& [k, v] : s.propaganda_distribution) v /= static_cast<double>(scored);
  for (auto& [k, v] : s.frame_distribution) v /= static_cast<double>(framed);
}

TopicStats header_of(const clustering::Story& story) {
  TopicStats s;
  s.topic_id = story.id;
  s.slug = story.slug;
  s.title = story.title;
  return s;
}

}  // namespace

TopicStats build_topic_stats(std::string_view topic, const clustering::ClusteringResult& stories,
                             std::span<const Article> articles,
                             const ingest::SourceRegistry* registry) {
  const auto* story = stories.find_story(topic);
  if (!story) throw NotFound("unknown topic '" + std::string(topic) + "'");
  TopicStats s = header_of(*story);
  std::map<std::string, std::size_t> country_totals;
  std::size_t scored = 0;
  std::size_t framed = 0;
  for (const auto& a : articles) {
    const auto country = country_of(a, registry);
    ++country_totals[country];
    if (story->article_ids.count(a.id)) add_article(s, a, country, scored, framed);
  }
  finish(s, country_totals, scored, framed);
  return s;
}

std::map<std::string, TopicStats> build_all_topic_stats(const clustering::ClusteringResult& stories,
                                                        std::span<const Article> articles,
                                                        const ingest::SourceRegistry* registry) {
  std::map<std::string, TopicStats> out;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counters;  // scored, framed
  for (const auto& story : stories.stories) out.emplace(story.id, header_of(story));
  std::map<std::string, std::size_t> country_totals;
  for (const auto& a : articles) {
    const auto country = country_of(a, registry);
    ++country_totals[country];
    auto it = stories.story_of.find(a.id);
    if (it == stories.story_of.end()) continue;
    auto s = out.find(it->second);
    if (s == out.end()) continue;
    auto& [scored, framed] = counters[it->second];
    add_article(s->second, a, country, scored, framed);
  }
  for (auto& [id, s] : out) {
    const auto& [scored, framed] = counters[id];
    finish(s, country_totals, scored, framed);
  }
  return out;
}

}  // namespace newsdesk::profiles
