#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/clustering/corpus.hpp"

namespace newsdesk::clustering {

/// Articles for offline clustering evaluation with optional gold labels.
struct EvalCorpus {
  std::vector<Article> articles;
  std::map<ArticleId, std::string> gold;
};

/// JSON Lines, one article per line: "id" (string or number), "title",
/// "body" or "text", "published_at" (RFC 3339 string or unix seconds),
/// optional "language", and the gold cluster under `gold_field` (string or
/// number). Unlike the article store, no canonical URL is needed. Throws
/// ConfigError naming the line.
EvalCorpus read_eval_corpus(std::istream& in, const std::string& gold_field = "gold");

/// `article_id,cluster` or tab-separated lines; a first line starting with
/// "id" or "article_id" is a header.
std::map<ArticleId, std::string> read_gold(std::istream& in);

/// {"articles", "evaluated", "stories", "params", "pairwise", "bcubed"} over
/// the articles that have a gold label. Throws PartitionMismatch when none do.
nlohmann::json evaluation_report(const ClusteringResult& result,
                                 const std::map<ArticleId, std::string>& gold,
                                 const ClusteringParams& params, std::size_t article_count);

/// `article_id<TAB>story_id` per article, by article id.
void write_assignments(std::ostream& out, const ClusteringResult& result,
                       const std::vector<Article>& articles);

}  // namespace newsdesk::clustering
