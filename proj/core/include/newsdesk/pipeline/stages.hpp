#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "newsdesk/classifiers/frame.hpp"
#include "newsdesk/classifiers/propaganda.hpp"
#include "newsdesk/classifiers/section.hpp"
#include "newsdesk/classifiers/stance.hpp"
#include "newsdesk/ingest/fetch.hpp"
#include "newsdesk/ingest/ingest.hpp"
#include "newsdesk/pipeline/stage.hpp"
#include "newsdesk/profiles/claims.hpp"

namespace newsdesk::pipeline {

namespace topics {
inline constexpr const char* kFetchRequests = "fetch.requests";
inline constexpr const char* kRawDocuments = "raw.documents";
inline constexpr const char* kIngested = "articles.ingested";
inline constexpr const char* kCategorized = "articles.categorized";
inline constexpr const char* kPropaganda = "articles.propaganda";
inline constexpr const char* kFramed = "articles.framed";
inline constexpr const char* kStanced = "articles.stanced";
inline constexpr const char* kAnnotated = "articles.annotated";
}  // namespace topics

struct StageTopology {
  std::string name;
  std::string input_topic;
  std::string output_topic;
};

/// The article-level stages in pipeline order.
const std::vector<StageTopology>& stage_topology();

/// Stage names in pipeline order.
const std::vector<std::string>& stage_names();

/// Article-level analyzers. Missing section or propaganda models leave that
/// annotation unset; frames and stance fall back to the lexical baselines.
struct AnalysisModels {
  std::shared_ptr<const classifiers::SectionClassifier> section;
  std::shared_ptr<const classifiers::PropagandaScorer> propaganda;
  std::shared_ptr<const classifiers::FramePlugin> frames;
  std::shared_ptr<const classifiers::StanceClassifier> stance;
  std::vector<profiles::Claim> claims;
};

struct StageDeps {
  ingest::Fetcher* fetcher = nullptr;
  ingest::SourceLookup sources;
  ingest::ArticleStore* store = nullptr;
  std::shared_ptr<const ingest::ContentExtractor> extractor;
  std::shared_ptr<const ingest::Translator> translator;
  std::function<Timestamp()> clock;
  AnalysisModels models;
};

struct StageSettings {
  std::map<std::string, std::size_t> parallelism;  // by stage name; default 1
  std::size_t max_retries = 3;
  std::size_t batch_size = 32;
};

/// fetch -> ingest (extract, translate, dedup, persist) -> categorize ->
/// propaganda -> frame -> stance -> store-annotate. Every message between
/// ingest and store-annotate is an Article JSON object that accumulates
/// annotations; the last stage writes them (write-once) and emits the id.
/// `deps` must outlive the stages.
std::vector<StageDescriptor> article_stages(const StageDeps& deps, const StageSettings& settings);

std::string fetch_request(const std::string& feed_id);
std::string article_message(const Article& article);
Article article_from_message(const std::string& payload);

}  // namespace newsdesk::pipeline
