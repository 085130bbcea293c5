#include <fstream>
#include <iostream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "common.hpp"
#include "newsdesk/clustering/eval.hpp"
#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/time.hpp"

namespace newsdesk::cli {

namespace {

struct EvalOptions {
  std::string input;
  std::string gold;
  std::string gold_field = "gold";
  std::string metrics_out;
  std::string assignments_out;
  std::string now;
  clustering::ClusteringParams params;
  bool unweighted = false;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  return in;
}

void run_eval(EvalOptions opt) {
  opt.params.weighted_edges = !opt.unweighted;
  opt.params.validate();

  auto in = open_input(opt.input);
  auto corpus = clustering::read_eval_corpus(in, opt.gold_field);
  if (!opt.gold.empty()) {
    auto g = open_input(opt.gold);
    corpus.gold = clustering::read_gold(g);
  }
  spdlog::info("{} articles, {} gold labels", corpus.articles.size(), corpus.gold.size());

  clustering::ClusteringResult result;
  if (opt.now.empty()) {
    result = clustering::cluster_corpus(corpus.articles, opt.params);
  } else {
    const auto now = parse_iso8601(opt.now);
    if (!now) throw ConfigError("--now is not an RFC 3339 timestamp: " + opt.now);
    clustering::ClusteringEngine engine(opt.params);
    result = engine.run(corpus.articles, *now);
  }

  if (!opt.assignments_out.empty()) {
    std::ostringstream out;
    clustering::write_assignments(out, result, corpus.articles);
    write_output(opt.assignments_out, out.str());
  }
  nlohmann::json report;
  if (corpus.gold.empty()) {
    report = {{"articles", corpus.articles.size()},
              {"stories", result.stories.size()},
              {"params", clustering::to_json(opt.params)}};
  } else {
    report = clustering::evaluation_report(result, corpus.gold, opt.params, corpus.articles.size());
  }
  const auto text = report.dump(2) + "\n";
  if (!opt.metrics_out.empty() && opt.metrics_out != "-") write_output(opt.metrics_out, text);
  std::cout << text;
}

}  // namespace

void register_cluster_eval(CLI::App& app) {
  auto opt = std::make_shared<EvalOptions>();
  auto* cmd = app.add_subcommand("cluster-eval",
                                 "Cluster a JSON Lines corpus and score it against gold labels");
  auto& p = opt->params;
  cmd->add_option("-i,--input", opt->input, "Articles, one JSON object per line")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--gold", opt->gold, "Gold labels as id,cluster CSV (overrides the JSONL field)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--gold-field", opt->gold_field, "JSONL field holding the gold cluster")
      ->capture_default_str();
  cmd->add_option("--window-days", p.window_days, "Window length n in days")->capture_default_str();
  cmd->add_option("--overlap-days", p.window_overlap_days, "Days shared by consecutive windows")
      ->capture_default_str();
  cmd->add_option("--t1", p.t1, "Edge similarity threshold")->capture_default_str();
  cmd->add_option("--t2", p.t2, "Topic merge threshold")->capture_default_str();
  cmd->add_option("--min-df", p.min_df, "Minimum document frequency of a term")->capture_default_str();
  cmd->add_option("--seed", p.seed, "Louvain seed")->capture_default_str();
  cmd->add_option("--restarts", p.louvain_restarts, "Louvain restarts per window")
      ->capture_default_str();
  cmd->add_flag("--unweighted", opt->unweighted, "Give every edge weight 1");
  cmd->add_option("--now", opt->now, "Run incrementally as of this RFC 3339 time");
  cmd->add_option("--metrics-out", opt->metrics_out, "Also write the metrics JSON here");
  cmd->add_option("--assignments-out", opt->assignments_out,
                  "Write article_id<TAB>story_id lines here ('-' for stdout)");
  cmd->callback([opt] { run_eval(*opt); });
}

}  // namespace newsdesk::cli
