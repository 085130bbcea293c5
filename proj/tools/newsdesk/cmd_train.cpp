#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "common.hpp"
#include "newsdesk/classifiers/propaganda.hpp"
#include "newsdesk/classifiers/section.hpp"
#include "newsdesk/common/errors.hpp"

namespace newsdesk::cli {

namespace {

struct TrainOptions {
  std::string input;
  std::string out;
  std::size_t min_df = 1;
  classifiers::TrainConfig train;
};

/// Calls `fn(json, line_number)` for every non-blank line.
template <typename Fn>
void each_json_line(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
    }
    try {
      fn(j, n);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
}

std::string example_text(const nlohmann::json& j) {
  if (j.contains("text")) return j.at("text").get<std::string>();
  return j.value("title", std::string{}) + "\n\n" + j.value("body", std::string{});
}

void run_section(const TrainOptions& opt) {
  std::vector<classifiers::SectionExample> examples;
  each_json_line(opt.input, [&](const nlohmann::json& j, std::size_t) {
    classifiers::SectionExample ex;
    ex.text = example_text(j);
    ex.language = parse_enum<Language>(j.value("language", std::string{"en"}));
    ex.label = parse_enum<SectionLabel>(j.contains("section") ? j.at("section").get<std::string>()
                                                              : j.at("label").get<std::string>());
    examples.push_back(std::move(ex));
  });
  const auto model = classifiers::SectionClassifier::train(examples, opt.train, opt.min_df);
  std::size_t correct = 0;
  for (const auto& ex : examples) correct += model.categorize(ex.text, ex.language) == ex.label;
  write_output(opt.out, model.to_json().dump() + "\n");
  spdlog::info("section model: {} examples, {} terms, training accuracy {:.4f}", examples.size(),
               model.vocabulary().size(), static_cast<double>(correct) / examples.size());
}

void run_propaganda(const TrainOptions& opt) {
  std::vector<classifiers::PropagandaExample> examples;
  each_json_line(opt.input, [&](const nlohmann::json& j, std::size_t) {
    classifiers::PropagandaExample ex;
    ex.text = example_text(j);
    if (j.contains("propagandistic")) {
      ex.propagandistic = j.at("propagandistic").get<bool>();
    } else {
      const auto label = j.at("label").get<std::string>();
      if (label != classifiers::kPropagandistic && label != classifiers::kNonPropagandistic) {
        throw ConfigError("unknown propaganda label '" + label + "'");
      }
      ex.propagandistic = label == classifiers::kPropagandistic;
    }
    examples.push_back(std::move(ex));
  });
  const auto scorer = classifiers::PropagandaScorer::train(examples, opt.train);
  std::size_t correct = 0;
  for (const auto& ex : examples) correct += (scorer.score(ex.text).index >= 0.5) == ex.propagandistic;
  if (opt.out.empty() || opt.out == "-") {
    std::cout << scorer.model().to_json().dump() << "\n";
  } else {
    scorer.model().save(opt.out);
  }
  spdlog::info("propaganda model: {} examples, training accuracy {:.4f}", examples.size(),
               static_cast<double>(correct) / examples.size());
}

void add_common(CLI::App& cmd, TrainOptions& opt) {
  cmd.add_option("-i,--input", opt.input, "Training examples, one JSON object per line")
      ->required()
      ->check(CLI::ExistingFile);
  cmd.add_option("-o,--out", opt.out, "Model file (default stdout)");
  cmd.add_option("--l2", opt.train.l2, "L2 penalty")->capture_default_str();
  cmd.add_option("--max-iter", opt.train.max_iter, "Gradient descent iterations")->capture_default_str();
  cmd.add_option("--tol", opt.train.tol, "Stop when the gradient max-norm falls below this")
      ->capture_default_str();
  cmd.add_option("--seed", opt.train.seed, "Seed for the initial weights")->capture_default_str();
}

}  // namespace

void register_train(CLI::App& app) {
  auto opt = std::make_shared<TrainOptions>();
  auto* cmd = app.add_subcommand("train", "Train a classifier from labelled JSON Lines");
  cmd->require_subcommand(1);
  auto* section = cmd->add_subcommand(
      "section", "Lines with \"text\" (or \"title\"/\"body\"), \"section\" and optional \"language\"");
  add_common(*section, *opt);
  section->add_option("--min-df", opt->min_df, "Minimum document frequency of a term")
      ->capture_default_str();
  section->callback([opt] { run_section(*opt); });
  auto* prop = cmd->add_subcommand(
      "propaganda", "Lines with \"text\" and \"propagandistic\" (bool) or \"label\"");
  add_common(*prop, *opt);
  prop->callback([opt] { run_propaganda(*opt); });
}

}  // namespace newsdesk::cli
