// Runs the newsdesk binary end to end.
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "newsdesk/classifiers/section.hpp"
#include "newsdesk/common/time.hpp"
#include "newsdesk/pipeline/queue.hpp"
#include "support/pipeline_harness.hpp"
#include "support/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(NEWSDESK_CLI) + " --log-level off " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = ::pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(NEWSDESK_TEST_DATA_DIR) + "/" + rel; }

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST(Cli, ClusterEvalScoresSyntheticTopics) {
  const auto dir = newsdesk::testing::scratch_dir("cli_eval");
  newsdesk::testing::TopicCorpusSpec spec;
  spec.seed = 4;
  const auto corpus = newsdesk::testing::make_topic_corpus(spec);
  {
    std::ofstream out(dir / "corpus.jsonl");
    for (const auto& a : corpus.articles) {
      out << json{{"id", a.id},
                  {"title", a.title},
                  {"body", a.body},
                  {"published_at", newsdesk::format_iso8601(a.published_at)},
                  {"gold", corpus.gold.at(a.id)}}
                 .dump()
          << "\n";
    }
  }
  const auto r = cli("cluster-eval -i " + (dir / "corpus.jsonl").string() + " --assignments-out " +
                     (dir / "assign.tsv").string() + " --metrics-out " + (dir / "m.json").string());
  ASSERT_EQ(r.status, 0) << r.out;
  const auto report = json::parse(r.out);
  EXPECT_EQ(report["evaluated"], 100);
  EXPECT_GE(report["bcubed"]["f1"].get<double>(), 0.95);
  EXPECT_GE(report["pairwise"]["f1"].get<double>(), 0.95);
  EXPECT_EQ(lines_of(dir / "assign.tsv").size(), 100u);
  std::ifstream m(dir / "m.json");
  EXPECT_EQ(json::parse(m), report);

  EXPECT_NE(cli("cluster-eval -i " + (dir / "corpus.jsonl").string() + " --overlap-days 6").status, 0);
}

TEST(Cli, StoreRoundTripAndProfiles) {
  const auto dir = newsdesk::testing::scratch_dir("cli_store");
  const auto db = (dir / "a.db").string();
  auto r = cli("store import --store " + db + " -i " + data("api/articles.jsonl"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["inserted"], 10);
  r = cli("store import --store " + db + " -i " + data("api/articles.jsonl"));
  EXPECT_EQ(json::parse(r.out)["inserted"], 0);

  r = cli("store export --store " + db + " -o " + (dir / "out.jsonl").string());
  ASSERT_EQ(r.status, 0);
  const auto exported = lines_of(dir / "out.jsonl");
  auto original = lines_of(data("api/articles.jsonl"));
  ASSERT_EQ(exported.size(), original.size());
  std::map<std::string, json> by_id;
  for (const auto& l : original) {
    auto j = json::parse(l);
    by_id[j["id"]] = j;
  }
  for (const auto& l : exported) {
    const auto j = json::parse(l);
    EXPECT_EQ(j, by_id.at(j["id"])) << j["id"];
  }

  const std::string inputs = " --sources " + data("api/sources.json") + " --claims " +
                             data("api/claims.json") + " --labels " + data("api/labels.csv") +
                             " --citations " + data("api/citations.csv");
  r = cli("profiles --store " + db + inputs + " --now 2019-05-10T00:00:00Z -m northwire --topics");
  ASSERT_EQ(r.status, 0);
  const auto p = json::parse(r.out);
  EXPECT_EQ(p["profiles"].size(), 1u);
  EXPECT_EQ(p["profiles"]["northwire"]["article_count"], 3);
  EXPECT_EQ(p["topics"].size(), 2u);
  EXPECT_EQ(cli("profiles --store " + db + inputs + " -m nobody").status, 2);
}

TEST(Cli, LagAndReplayOperateOnTheQueue) {
  const auto dir = newsdesk::testing::scratch_dir("cli_queue");
  {
    newsdesk::pipeline::DurableLog q(dir / "queue", newsdesk::pipeline::Durability::flush);
    q.create_topic("fetch.requests");
    q.publish_batch("fetch.requests", {"{}", "{}", "{}"});
    q.commit("fetch.requests", "fetch", 3);
  }
  const std::string where = " --data-dir " + dir.string();
  auto r = cli("pipeline lag" + where);
  ASSERT_EQ(r.status, 0);
  auto lag = json::parse(r.out);
  EXPECT_EQ(lag["fetch"]["lag"], 0);
  EXPECT_EQ(lag["fetch"]["end"], 3);
  EXPECT_FALSE(lag["ingest"].contains("lag"));

  r = cli("pipeline replay --topic fetch.requests --offset 1" + where);
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["group"], "fetch");
  lag = json::parse(cli("pipeline lag" + where).out);
  EXPECT_EQ(lag["fetch"]["lag"], 2);

  EXPECT_NE(cli("pipeline replay --topic fetch.requests --offset 9" + where).status, 0);
  EXPECT_NE(cli("pipeline replay --topic nowhere --offset 0" + where).status, 0);
  EXPECT_EQ(cli("pipeline stop" + where).status, 2);
}

TEST(Cli, TrainSectionWritesALoadableModel) {
  const auto dir = newsdesk::testing::scratch_dir("cli_train");
  {
    std::ofstream out(dir / "train.jsonl");
    const char* words[] = {"match goal league striker", "market shares profit bank",
                           "vaccine hospital doctor clinic"};
    const char* labels[] = {"sports", "business", "health"};
    for (int i = 0; i < 30; ++i) {
      out << json{{"text", std::string(words[i % 3]) + " report " + std::to_string(i)},
                  {"section", labels[i % 3]}}
                 .dump()
          << "\n";
    }
  }
  const auto model_path = dir / "section.json";
  ASSERT_EQ(cli("train section -i " + (dir / "train.jsonl").string() + " -o " + model_path.string())
                .status,
            0);
  std::ifstream in(model_path);
  const auto model = newsdesk::classifiers::SectionClassifier::from_json(json::parse(in));
  EXPECT_EQ(model.categorize("the striker scored a goal", newsdesk::Language::en),
            newsdesk::SectionLabel::sports);
  EXPECT_EQ(model.categorize("bank profit", newsdesk::Language::en), newsdesk::SectionLabel::business);
}
