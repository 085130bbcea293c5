#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "newsdesk/ingest/ingest.hpp"
#include "newsdesk/pipeline/stages.hpp"

namespace newsdesk::testing {

struct NewsFixture {
  std::shared_ptr<const ingest::SourceRegistry> registry;
  std::vector<ingest::RawDocument> documents;  // includes re-fetches of the same URL
  std::size_t distinct_urls = 0;
  std::vector<profiles::Claim> claims;
};

/// `n` HTML pages spread over five media, plus every tenth page fetched a
/// second time from a URL variant that canonicalizes to the same article.
NewsFixture make_news_fixture(std::size_t n, std::uint64_t seed = 7);

/// Small section and propaganda models trained on text shaped like the
/// fixture, plus the frame and stance baselines.
pipeline::AnalysisModels fixture_models(const NewsFixture& fixture);

/// Kills each configured stage once, at the n-th time it reaches the given
/// point.
class KillOnce final : public pipeline::FaultInjector {
 public:
  void arm(const std::string& stage, pipeline::FaultPoint point, std::size_t nth);
  void at(pipeline::FaultPoint point, const std::string& stage, pipeline::Offset offset) override;
  std::size_t kills() const { return kills_; }
  std::vector<std::string> killed_stages() const { return killed_; }

 private:
  struct Plan {
    pipeline::FaultPoint point;
    std::size_t nth;
    std::size_t seen = 0;
    bool fired = false;
  };
  std::map<std::string, Plan> plans_;
  std::size_t kills_ = 0;
  std::vector<std::string> killed_;
};

struct PipelineRun {
  std::vector<std::string> export_lines;  // articles without timestamps, by id
  std::size_t stored = 0;
  std::size_t kills = 0;
  std::size_t restarts = 0;
  std::size_t dead_lettered = 0;
  std::size_t annotated_messages = 0;  // may exceed `stored` after redelivery
};

/// Publishes the fixture's documents to raw.documents and drives every stage
/// to idle. After each StageKilled the queue and store are closed and
/// reopened from `dir`, as after a process restart.
PipelineRun run_fixture_pipeline(const NewsFixture& fixture, const pipeline::AnalysisModels& models,
                                 const std::filesystem::path& dir, KillOnce* faults = nullptr);

/// Arms one kill per stage at a seeded point.
void arm_random_kills(KillOnce& faults, std::size_t documents, std::size_t batch_size,
                      std::uint64_t seed);

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

}  // namespace newsdesk::testing
