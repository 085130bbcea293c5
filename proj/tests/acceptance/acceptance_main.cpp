// Prints one PASS/FAIL line per acceptance criterion; exits non-zero when any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "newsdesk/api/service.hpp"
#include "newsdesk/classifiers/maxent.hpp"
#include "newsdesk/classifiers/propaganda.hpp"
#include "newsdesk/classifiers/section.hpp"
#include "newsdesk/clustering/corpus.hpp"
#include "newsdesk/clustering/louvain.hpp"
#include "newsdesk/clustering/metrics.hpp"
#include "newsdesk/pipeline/stages.hpp"
#include "newsdesk/profiles/valence.hpp"
#include "support/api_fixture.hpp"
#include "support/json_schema.hpp"
#include "support/oracles.hpp"
#include "support/pipeline_harness.hpp"
#include "support/synthetic.hpp"

using namespace newsdesk;
namespace nt = newsdesk::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- valence

Verdict valence_criterion() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2019);
  std::uniform_int_distribution<std::uint64_t> total(1, 5'000'000);
  double max_delta = 0.0;
  std::size_t asym = 0;
  std::size_t scale = 0;
  for (int i = 0; i < 1000; ++i) {
    profiles::GroupCitationCounts c{"m", "t", 0, 0, total(rng), total(rng)};
    c.tf_c0 = std::uniform_int_distribution<std::uint64_t>(0, c.total_c0)(rng);
    c.tf_c1 = std::uniform_int_distribution<std::uint64_t>(0, c.total_c1)(rng);
    if (c.tf_c0 == 0 && c.tf_c1 == 0) c.tf_c1 = 1;
    const double v = profiles::valence(c);
    max_delta = std::max(max_delta, std::abs(v - nt::valence_oracle(c.tf_c0, c.total_c0, c.tf_c1,
                                                                    c.total_c1)));
    profiles::GroupCitationCounts swapped{"m", "t", c.tf_c1, c.tf_c0, c.total_c1, c.total_c0};
    if (profiles::valence(swapped) != -v) ++asym;
    const std::uint64_t k = 1 + rng() % 1000;
    profiles::GroupCitationCounts scaled{"m", "t", c.tf_c0 * k, c.tf_c1 * k, c.total_c0 * k,
                                         c.total_c1 * k};
    if (profiles::valence(scaled) != v) ++scale;
  }
  const bool examples = profiles::valence({"m", "t", 5, 0, 10, 10}) == 1.0 &&
                        profiles::valence({"m", "t", 3, 6, 10, 20}) == 0.0 &&
                        std::abs(profiles::valence({"m", "t", 30, 10, 100, 100}) - 0.5) < 1e-12;
  const double secs = seconds_since(t0);
  return {max_delta < 1e-12 && asym == 0 && scale == 0 && examples && secs < 1.0,
          fmt::format("max|d|={:.3g} antisymmetry_violations={} scale_violations={} "
                      "worked_examples={} time={:.3f}s",
                      max_delta, asym, scale, examples ? "ok" : "wrong", secs)};
}

// ------------------------------------------------------------- propaganda

PropagandaLabel table_label(double p) {
  static constexpr std::array<std::pair<double, PropagandaLabel>, 5> table{{
      {0.0, PropagandaLabel::very_unlikely},
      {0.2, PropagandaLabel::unlikely},
      {0.4, PropagandaLabel::somehow},
      {0.6, PropagandaLabel::likely},
      {0.8, PropagandaLabel::very_likely},
  }};
  PropagandaLabel out = table[0].second;
  for (const auto& [lo, label] : table) {
    if (p >= lo) out = label;
  }
  return out;
}

Verdict propaganda_criterion() {
  std::vector<double> points{0.0, std::nextafter(0.2, 0.0), 0.2, 0.4, 0.6, 0.8, 1.0};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) points.push_back(u(rng));
  std::size_t mismatches = 0;
  for (double p : points) mismatches += classifiers::propaganda_label(p) != table_label(p);
  std::size_t unrejected = 0;
  for (double p : {-1e-9, 1.0 + 1e-9, std::numeric_limits<double>::quiet_NaN()}) {
    try {
      classifiers::propaganda_label(p);
      ++unrejected;
    } catch (const RangeError&) {
    }
  }
  return {mismatches == 0 && unrejected == 0,
          fmt::format("points={} mismatches={} out_of_range_accepted={}", points.size(), mismatches,
                      unrejected)};
}

// ----------------------------------------------------------------- BCubed

Verdict bcubed_criterion() {
  const auto t0 = Clock::now();
  double max_delta = 0.0;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto parts = nt::all_partitions(n);
    for (const auto& p : parts) {
      for (const auto& g : parts) {
        const auto a = clustering::bcubed_f1(p, g);
        const auto b = nt::bcubed_oracle(p, g);
        max_delta = std::max({max_delta, std::abs(a.precision - b.precision),
                              std::abs(a.recall - b.recall), std::abs(a.f1 - b.f1)});
        ++pairs;
      }
    }
  }
  const std::size_t six = nt::all_partitions(6).size();
  const double secs = seconds_since(t0);
  return {max_delta < 1e-12 && six * six == 41209 && secs < 30.0,
          fmt::format("pairs={} (n=6: {}) max|d|={:.3g} time={:.2f}s", pairs, six * six, max_delta,
                      secs)};
}

// ---------------------------------------------------------------- Louvain

clustering::SimilarityGraph random_graph(std::mt19937_64& rng, std::size_t n) {
  auto g = clustering::SimilarityGraph::with_nodes(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double density = 0.2 + 0.5 * u(rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (u(rng) < density) g.add_edge(i, j, 0.05 + 0.95 * u(rng));
    }
  }
  return g;
}

Verdict louvain_criterion() {
  std::mt19937_64 rng(100);
  double worst_gap = -std::numeric_limits<double>::infinity();
  std::size_t below = 0;
  std::size_t trace_breaks = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(rng, 2 + rng() % 9);
    const auto r = clustering::louvain(
        g, {.seed = 0, .record_moves = true, .restarts = clustering::ClusteringParams{}.louvain_restarts});
    for (std::size_t t = 1; t < r.trace.size(); ++t) trace_breaks += r.trace[t] < r.trace[t - 1];
    const double gap = nt::best_modularity(g).modularity - r.modularity;
    worst_gap = std::max(worst_gap, gap);
    below += gap > 0.05;
  }

  auto cliques = clustering::SimilarityGraph::with_nodes(8);
  for (std::size_t base : {0u, 4u}) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) cliques.add_edge(base + i, base + j, 1.0);
    }
  }
  cliques.add_edge(3, 4, 0.31);
  const auto split = clustering::louvain(cliques).partition;
  const bool two = split == clustering::Partition{0, 0, 0, 0, 1, 1, 1, 1};

  return {below == 0 && trace_breaks == 0 && two,
          fmt::format("graphs=100 worst_gap_to_optimum={:.4f} below_tolerance={} "
                      "trace_decreases={} two_cliques={}",
                      worst_gap, below, trace_breaks, two ? "recovered" : "wrong")};
}

// --------------------------------------------------- end-to-end clustering

Verdict clustering_criterion() {
  const auto corpus = nt::make_topic_corpus({});
  const auto t0 = Clock::now();
  const auto a = clustering::cluster_corpus(corpus.articles, clustering::ClusteringParams{});
  const double secs = seconds_since(t0);
  const auto b = clustering::cluster_corpus(corpus.articles, clustering::ClusteringParams{});
  const std::map<std::string, std::string> predicted(a.story_of.begin(), a.story_of.end());
  const auto bc = clustering::bcubed_f1(predicted, corpus.gold);
  const auto pw = clustering::pairwise_f1(predicted, corpus.gold);
  const bool same = a.story_of == b.story_of && a.stories == b.stories;
  return {bc.f1 >= 0.95 && pw.f1 >= 0.95 && same && secs < 5.0 &&
              predicted.size() == corpus.articles.size(),
          fmt::format("articles={} stories={} bcubed_f1={:.4f} pairwise_f1={:.4f} "
                      "deterministic={} time={:.2f}s",
                      corpus.articles.size(), a.stories.size(), bc.f1, pw.f1, same ? "yes" : "no",
                      secs)};
}

// ----------------------------------------------------------------- maxent

Verdict maxent_criterion() {
  using namespace classifiers;
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g(0.0, 1.0);

  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng() % 5;
    const std::size_t k = 2 + rng() % 3;
    std::vector<Sample> samples;
    for (int i = 0; i < 8; ++i) {
      std::vector<double> x(d);
      for (auto& v : x) v = g(rng);
      samples.push_back({FeatureVector::from_dense(x), static_cast<std::size_t>(rng() % k)});
    }
    const MaxentObjective obj(samples, k, d, 0.1);
    std::vector<double> theta(obj.parameter_count());
    for (auto& t : theta) t = 0.5 * g(rng);
    std::vector<double> grad(theta.size());
    obj.value_and_gradient(theta, grad);
    const double h = 1e-5;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      auto plus = theta;
      auto minus = theta;
      plus[i] += h;
      minus[i] -= h;
      const double numeric = (obj.value(plus) - obj.value(minus)) / (2 * h);
      const double scale = std::max({std::abs(numeric), std::abs(grad[i]), 1e-6});
      worst = std::max(worst, std::abs(numeric - grad[i]) / scale);
    }
  }

  std::vector<LabeledSample> sep;
  for (int i = 0; i < 300; ++i) {
    std::vector<double> x{g(rng), g(rng), g(rng), g(rng)};
    const double margin = 1.5 * x[0] - x[1] + 0.5 * x[2] - 0.25 * x[3];
    if (std::abs(margin) < 0.2) continue;
    sep.push_back({FeatureVector::from_dense(x), margin > 0 ? "pos" : "neg"});
  }
  TrainConfig cfg;
  cfg.l2 = 1e-6;
  cfg.max_iter = 2000;
  TrainingTrace trace;
  const auto m = train_maxent(sep, {"dense", 4, nlohmann::json::object()}, cfg, {}, &trace);
  std::size_t correct = 0;
  for (const auto& s : sep) correct += m.classes()[m.predict(s.features)] == s.label;
  std::size_t increases = 0;
  for (std::size_t i = 1; i < trace.losses.size(); ++i) increases += trace.losses[i] > trace.losses[i - 1];

  return {worst < 1e-4 && correct == sep.size() && increases == 0 && trace.losses.size() >= 2,
          fmt::format("fd_max_rel_err={:.3g} separable_accuracy={}/{} loss_increases={} steps={}",
                      worst, correct, sep.size(), increases, trace.losses.size() - 1)};
}

// ---------------------------------------------------------------- section

Verdict section_criterion() {
  const auto corpus = nt::make_section_corpus({.per_section = 500, .seed = 31});
  std::vector<classifiers::SectionExample> train;
  std::vector<classifiers::SectionExample> test;
  // Every fifth document per section is held out.
  for (std::size_t i = 0; i < corpus.size(); ++i) (((i / 6) % 5 == 4) ? test : train).push_back(corpus[i]);
  const auto model = classifiers::SectionClassifier::train(train, {}, 1);

  std::array<std::size_t, 6> train_counts{};
  for (const auto& e : train) ++train_counts[to_index(e.label)];
  const std::size_t majority = static_cast<std::size_t>(
      std::max_element(train_counts.begin(), train_counts.end()) - train_counts.begin());

  std::vector<std::size_t> truth, pred, base;
  for (const auto& e : test) {
    truth.push_back(to_index(e.label));
    pred.push_back(to_index(model.categorize(e.text, e.language)));
    base.push_back(majority);
  }
  const double f1 = nt::macro_f1(truth, pred, 6);
  const double baseline = nt::macro_f1(truth, base, 6);
  return {f1 >= 0.9 && f1 - baseline >= 0.4,
          fmt::format("train={} held_out={} macro_f1={:.4f} majority_baseline={:.4f}", train.size(),
                      test.size(), f1, baseline)};
}

// --------------------------------------------------------------- pipeline

Verdict pipeline_criterion() {
  const auto fx = nt::make_news_fixture(1000);
  const auto models = nt::fixture_models(fx);
  const auto reference = nt::run_fixture_pipeline(fx, models, nt::scratch_dir("accept-ref"));
  nt::KillOnce kill;
  nt::arm_random_kills(kill, fx.documents.size(), 32, 2019);
  const auto faulty = nt::run_fixture_pipeline(fx, models, nt::scratch_dir("accept-faulty"), &kill);

  const std::size_t expected_kills = pipeline::stage_names().size() - 1;  // fetch is bypassed
  std::set<std::string> ids;
  for (const auto& line : faulty.export_lines) ids.insert(nlohmann::json::parse(line).at("id").get<std::string>());
  const bool identical = faulty.export_lines == reference.export_lines;
  const bool unique = ids.size() == faulty.export_lines.size() && faulty.stored == fx.distinct_urls;
  return {identical && unique && faulty.kills == expected_kills && faulty.dead_lettered == 0,
          fmt::format("documents={} distinct={} stored={} kills={}/{} restarts={} "
                      "redelivered_annotations={} identical_export={} duplicates={}",
                      fx.documents.size(), fx.distinct_urls, faulty.stored, faulty.kills,
                      expected_kills, faulty.restarts,
                      faulty.annotated_messages - std::min(faulty.annotated_messages, reference.annotated_messages),
                      identical ? "yes" : "no", faulty.export_lines.size() - ids.size())};
}

// -------------------------------------------------------------------- API

Verdict api_criterion() {
  auto fixture = nt::load_api_fixture();
  const auto snapshot = fixture.snapshots().current();
  api::ApiService service(fixture.snapshots());
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::set<std::string> endpoints;
  std::set<int> statuses;
  for (const auto& c : nt::api_cases(*snapshot)) {
    ++cases;
    const auto r = service.handle(c.method, c.path, c.query);
    std::string why;
    if (r.status != c.status) why = fmt::format("status {} != {}", r.status, c.status);
    if (why.empty()) why = nt::schema_violation(r.body, c.schema);
    if (why.empty()) {
      const auto expected = nt::golden("api/" + c.name, r.body);
      if (!expected) why = "missing golden";
      else if (*expected != r.body) why = "body differs from golden";
    }
    if (!why.empty()) failures.push_back(c.name + ": " + why);
    std::istringstream path(c.path);
    std::string root, version, resource;
    std::getline(path, root, '/');
    std::getline(path, version, '/');
    std::getline(path, resource, '/');
    if (version == "v1") endpoints.insert(resource);
    statuses.insert(r.status);
  }
  std::string codes;
  for (int s : statuses) codes += (codes.empty() ? "" : ",") + std::to_string(s);
  std::string resources;
  for (const auto& e : endpoints) resources += (resources.empty() ? "" : ",") + e;
  std::size_t covered = 0;
  for (const char* e : {"stories", "topics", "media", "articles", "search"}) covered += endpoints.count(e);
  return {failures.empty() && covered == 5,
          fmt::format("cases={} endpoints=[{}] statuses=[{}] failures={}{}", cases, resources, codes,
                      failures.size(), failures.empty() ? "" : " first: " + failures.front())};
}

}  // namespace

int main() {
  // Acceptance compares against checked-in goldens; it never rewrites them.
  ::unsetenv("NEWSDESK_UPDATE_GOLDENS");
  spdlog::set_level(spdlog::level::warn);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"valence", valence_criterion},
      {"propaganda-bucketing", propaganda_criterion},
      {"bcubed-exhaustive", bcubed_criterion},
      {"louvain", louvain_criterion},
      {"end-to-end-clustering", clustering_criterion},
      {"maxent", maxent_criterion},
      {"section-categorizer", section_criterion},
      {"pipeline-fault-tolerance", pipeline_criterion},
      {"api-golden", api_criterion},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
