#include "newsdesk/classifiers/source_classifier.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "newsdesk/classifiers/propaganda.hpp"
#include "newsdesk/classifiers/section.hpp"
#include "newsdesk/common/errors.hpp"
#include "newsdesk/textproc/sparse_vector.hpp"

namespace newsdesk::classifiers {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename E>
LinearModel train_one(const std::map<MediumId, MediumLabels>& labels,
                      const std::map<MediumId, std::vector<Article>>& articles,
                      const TrainConfig& config, std::optional<E> MediumLabels::*field) {
  std::vector<LabeledSample> samples;
  std::set<std::string> distinct;
  for (const auto& [medium, l] : labels) {
    const auto& value = l.*field;
    if (!value) continue;
    auto it = articles.find(medium);
    if (it == articles.end() || it->second.empty()) continue;
    samples.push_back({medium_feature_vector(it->second), std::string(to_string(*value))});
    distinct.insert(samples.back().label);
  }
  if (distinct.size() < 2) return {};
  return train_maxent(samples, propaganda_feature_space(), config);
}

}  // namespace

std::map<MediumId, MediumLabels> parse_labels_csv(std::string_view content) {
  std::map<MediumId, MediumLabels> out;
  std::istringstream in{std::string(content)};
  std::string line;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto cells = split_csv_line(line);
    if (cells.size() != 3 || cells[0].empty()) {
      throw ConfigError("labels csv line " + std::to_string(lineno) +
                        ": expected medium_id,factuality,bias");
    }
    MediumLabels l;
    if (!cells[1].empty()) l.factuality = parse_enum<Factuality>(cells[1]);
    if (!cells[2].empty()) l.bias = parse_enum<BiasLabel>(cells[2]);
    out[cells[0]] = l;
  }
  return out;
}

std::map<MediumId, MediumLabels> load_labels_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open labels file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_labels_csv(ss.str());
}

FeatureVector medium_feature_vector(std::span<const Article> articles) {
  textproc::SparseAccumulator acc;
  for (const auto& a : articles) acc.add(propaganda_features(article_text(a)));
  return acc.mean();
}

SourceClassifier SourceClassifier::train(const std::map<MediumId, MediumLabels>& labels,
                                         const std::map<MediumId, std::vector<Article>>& articles,
                                         const TrainConfig& config) {
  SourceClassifier c;
  c.factuality_ = train_one<Factuality>(labels, articles, config, &MediumLabels::factuality);
  c.bias_ = train_one<BiasLabel>(labels, articles, config, &MediumLabels::bias);
  return c;
}

MediumLabels SourceClassifier::predict(std::span<const Article> articles) const {
  MediumLabels out;
  if (articles.empty()) return out;
  const auto x = medium_feature_vector(articles);
  if (factuality_.fitted()) {
    out.factuality = parse_enum<Factuality>(factuality_.classes()[factuality_.predict(x)]);
  }
  if (bias_.fitted()) out.bias = parse_enum<BiasLabel>(bias_.classes()[bias_.predict(x)]);
  return out;
}

}  // namespace newsdesk::classifiers
