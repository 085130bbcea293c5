#include "newsdesk/clustering/eval.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "newsdesk/clustering/metrics.hpp"
#include "newsdesk/common/errors.hpp"

namespace newsdesk::clustering {

namespace {

std::string scalar_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  throw ConfigError("expected a string or integer, got " + v.dump());
}

}  // namespace

EvalCorpus read_eval_corpus(std::istream& in, const std::string& gold_field) {
  EvalCorpus corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      Article a;
      a.id = scalar_string(j.at("id"));
      a.title = j.value("title", "");
      a.body = j.contains("body") ? j.at("body").get<std::string>() : j.value("text", "");
      if (j.contains("language")) a.language = parse_enum<Language>(j.at("language").get<std::string>());
      const auto& t = j.at("published_at");
      if (t.is_number()) {
        a.published_at = from_unix(t.get<std::int64_t>());
      } else {
        auto parsed = parse_any_date(t.get<std::string>());
        if (!parsed) throw ConfigError("bad published_at " + t.dump());
        a.published_at = *parsed;
      }
      a.fetched_at = a.published_at;
      if (j.contains(gold_field) && !j.at(gold_field).is_null()) {
        corpus.gold[a.id] = scalar_string(j.at(gold_field));
      }
      corpus.articles.push_back(std::move(a));
    } catch (const std::exception& e) {
      throw ConfigError("corpus line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::vector<ArticleId> ids;
  for (const auto& a : corpus.articles) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end()) {
    throw ConfigError("duplicate article id in corpus: " + *dup);
  }
  return corpus;
}

std::map<ArticleId, std::string> read_gold(std::istream& in) {
  std::map<ArticleId, std::string> gold;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && (line.rfind("id", 0) == 0 || line.rfind("article_id", 0) == 0)) continue;
    const auto sep = line.find_first_of(",\t");
    if (sep == std::string::npos || sep == 0 || sep + 1 == line.size()) {
      throw ConfigError("gold line " + std::to_string(lineno) + ": expected article_id,cluster");
    }
    gold[line.substr(0, sep)] = line.substr(sep + 1);
  }
  return gold;
}

nlohmann::json evaluation_report(const ClusteringResult& result,
                                 const std::map<ArticleId, std::string>& gold,
                                 const ClusteringParams& params, std::size_t article_count) {
  std::map<std::string, std::string> predicted;
  std::map<std::string, std::string> expected;
  for (const auto& [id, label] : gold) {
    auto it = result.story_of.find(id);
    if (it == result.story_of.end()) continue;
    predicted[id] = it->second;
    expected[id] = label;
  }
  if (predicted.empty()) throw PartitionMismatch("no gold-labelled article was clustered");
  return {{"articles", article_count},
          {"evaluated", predicted.size()},
          {"stories", result.stories.size()},
          {"params", to_json(params)},
          {"pairwise", to_json(pairwise_f1(predicted, expected))},
          {"bcubed", to_json(bcubed_f1(predicted, expected))}};
}

void write_assignments(std::ostream& out, const ClusteringResult& result,
                       const std::vector<Article>& articles) {
  std::vector<ArticleId> ids;
  ids.reserve(articles.size());
  for (const auto& a : articles) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) {
    auto it = result.story_of.find(id);
    out << id << '\t' << (it == result.story_of.end() ? "-" : it->second) << '\n';
  }
}

}  // namespace newsdesk::clustering
