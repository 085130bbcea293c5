#include "newsdesk/profiles/media_profile.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::profiles {

namespace {

template <typename E>
nlohmann::json enum_map(const std::map<E, double>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : m) j[std::string(to_string(k))] = v;
  return j;
}

std::string_view source_name(LabelSource s) {
  switch (s) {
    case LabelSource::labels_file:
      return "labels_file";
    case LabelSource::classifier:
      return "classifier";
    default:
      return "none";
  }
}

}  // namespace

std::optional<int> MediaProfile::hyper_partisanship() const {
  if (!bias) return std::nullopt;
  return std::abs(static_cast<int>(to_index(*bias)) - static_cast<int>(to_index(BiasLabel::center)));
}

nlohmann::json to_json(const MediaProfile& p) {
  nlohmann::json stance = nlohmann::json::object();
  for (const auto& [claim, s] : p.stance_by_claim) {
    stance[claim] = {{"distribution", enum_map(s.distribution)},
                     {"related", s.related},
                     {"unrelated", s.unrelated},
                     {"coverage", s.coverage}};
  }
  nlohmann::json valences = nlohmann::json::array();
  for (const auto& v : p.valences) valences.push_back(to_json(v));
  nlohmann::json j = {{"medium_id", p.medium_id},
                      {"name", p.name},
                      {"country", p.country},
                      {"article_count", p.article_count},
                      {"propaganda_distribution", enum_map(p.propaganda_distribution)},
                      {"frame_distribution", enum_map(p.frame_distribution)},
                      {"stance_by_claim", stance},
                      {"factuality", nullptr},
                      {"bias", nullptr},
                      {"hyper_partisanship", nullptr},
                      {"label_source", source_name(p.label_source)},
                      {"valences", valences},
                      {"audience", p.audience ? *p.audience : nlohmann::json(nullptr)}};
  if (p.factuality) j["factuality"] = to_string(*p.factuality);
  if (p.bias) j["bias"] = to_string(*p.bias);
  if (auto h = p.hyper_partisanship()) j["hyper_partisanship"] = *h;
  return j;
}

MediaProfile build_media_profile(const MediumId& medium_id, const ProfileInputs& in) {
  MediaProfile p;
  p.medium_id = medium_id;
  const ingest::MediaSource* source = in.registry ? in.registry->find_medium(medium_id) : nullptr;
  if (source) {
    p.name = source->name;
    p.country = source->country;
    p.audience = source->audience;
  } else {
    p.name = medium_id;
  }

  std::vector<const Article*> mine;
  for (const auto& a : in.articles) {
    if (a.medium_id == medium_id) mine.push_back(&a);
  }
  if (!source && mine.empty()) throw NotFound("unknown medium '" + medium_id + "'");
  p.article_count = mine.size();

  std::size_t scored = 0;
  std::size_t framed = 0;
  for (const Article* a : mine) {
    if (a->propaganda) {
      p.propaganda_distribution[a->propaganda->label] += 1.0;
      ++scored;
    }
    if (a->frame_distribution) {
      for (const auto& [f, w] : *a->frame_distribution) p.frame_distribution[f] += w;
      ++framed;
    }
  }
  for (auto& [k, v] : p.propaganda_distribution) v /= static_cast<double>(scored);
  for (auto& [k, v] : p.frame_distribution) v /= static_cast<double>(framed);

  std::set<ClaimId> known;
  for (const auto& c : in.claims) known.insert(c.id);
  for (const Article* a : mine) {
    for (const auto& [claim, label] : a->stances) {
      if (!known.empty() && !known.count(claim)) continue;
      auto& s = p.stance_by_claim[claim];
      if (label == StanceLabel::unrelated) {
        ++s.unrelated;
      } else {
        ++s.related;
        s.distribution[label] += 1.0;
      }
    }
  }
  for (auto& [claim, s] : p.stance_by_claim) {
    for (auto& [k, v] : s.distribution) v /= static_cast<double>(s.related);
    s.coverage = static_cast<double>(s.related) / static_cast<double>(s.related + s.unrelated);
  }

  if (in.labels) {
    if (auto it = in.labels->find(medium_id); it != in.labels->end()) {
      p.factuality = it->second.factuality;
      p.bias = it->second.bias;
      if (p.factuality || p.bias) p.label_source = LabelSource::labels_file;
    }
  }
  if (in.classifier && (!p.factuality || !p.bias) && !mine.empty()) {
    std::vector<Article> copies;
    copies.reserve(mine.size());
    for (const Article* a : mine) copies.push_back(*a);
    const auto predicted = in.classifier->predict(copies);
    bool used = false;
    if (!p.factuality && predicted.factuality) {
      p.factuality = predicted.factuality;
      used = true;
    }
    if (!p.bias && predicted.bias) {
      p.bias = predicted.bias;
      used = true;
    }
    if (used && p.label_source == LabelSource::none) p.label_source = LabelSource::classifier;
  }

  std::vector<GroupCitationCounts> counts;
  for (const auto& c : in.citations) {
    if (c.medium_id == medium_id) counts.push_back(c);
  }
  p.valences = valence_records(counts, in.valence);
  std::sort(p.valences.begin(), p.valences.end(),
            [](const auto& a, const auto& b) { return a.topic_id < b.topic_id; });
  return p;
}

}  // namespace newsdesk::profiles
