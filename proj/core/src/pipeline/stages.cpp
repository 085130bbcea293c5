#include "newsdesk/pipeline/stages.hpp"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::pipeline {

std::string fetch_request(const std::string& feed_id) {
  return nlohmann::json{{"feed_id", feed_id}}.dump();
}

std::string article_message(const Article& article) { return to_json(article).dump(); }

Article article_from_message(const std::string& payload) {
  return article_from_json(nlohmann::json::parse(payload));
}

const std::vector<StageTopology>& stage_topology() {
  static const std::vector<StageTopology> t{
      {"fetch", topics::kFetchRequests, topics::kRawDocuments},
      {"ingest", topics::kRawDocuments, topics::kIngested},
      {"categorize", topics::kIngested, topics::kCategorized},
      {"propaganda", topics::kCategorized, topics::kPropaganda},
      {"frame", topics::kPropaganda, topics::kFramed},
      {"stance", topics::kFramed, topics::kStanced},
      {"store-annotate", topics::kStanced, topics::kAnnotated}};
  return t;
}

const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : stage_topology()) n.push_back(s.name);
    return n;
  }();
  return names;
}

namespace {

StageDescriptor make_stage(const std::string& name, Handler handler,
                           const StageSettings& settings) {
  const auto& topo = stage_topology();
  auto t = std::find_if(topo.begin(), topo.end(), [&](const auto& s) { return s.name == name; });
  StageDescriptor d;
  d.name = name;
  d.input_topic = t->input_topic;
  d.output_topic = t->output_topic;
  d.handler = std::move(handler);
  auto it = settings.parallelism.find(name);
  d.parallelism = it == settings.parallelism.end() ? 1 : std::max<std::size_t>(1, it->second);
  d.max_retries = settings.max_retries;
  d.batch_size = settings.batch_size;
  return d;
}

// Wraps a per-article transformation into a handler that forwards the
// updated article.
Handler article_handler(std::function<void(Article&)> fn) {
  return [fn = std::move(fn)](const Message& m) {
    Article a = article_from_message(m.payload);
    fn(a);
    return std::vector<std::string>{article_message(a)};
  };
}

}  // namespace

std::vector<StageDescriptor> article_stages(const StageDeps& deps, const StageSettings& settings) {
  if (!deps.store) throw ConfigError("pipeline stages need an article store");
  if (!deps.extractor || !deps.translator) throw ConfigError("pipeline stages need an extractor");
  const StageDeps* d = &deps;
  auto clock = deps.clock;
  if (!clock) {
    clock = [] { return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()); };
  }

  Handler fetch = [d, clock](const Message& m) {
    if (!d->fetcher) throw ConfigError("no fetcher configured");
    const auto req = nlohmann::json::parse(m.payload);
    const std::string feed_id = req.at("feed_id").get<std::string>();
    auto feed = d->sources ? d->sources(feed_id) : std::nullopt;
    if (!feed) throw NotFound("unknown feed '" + feed_id + "'");
    auto crawl = ingest::crawl_feed(*feed, *d->fetcher, clock);
    for (const auto& e : crawl.errors) {
      spdlog::warn("fetch {}: {}: {}", feed_id, e.fetch_url, e.message);
    }
    std::vector<std::string> docs;
    docs.reserve(crawl.documents.size());
    for (const auto& doc : crawl.documents) docs.push_back(ingest::to_json(doc).dump());
    return docs;
  };

  Handler ingest = [d](const Message& m) {
    ingest::Ingestor ingestor(*d->store, *d->extractor, *d->translator, d->sources);
    auto doc = ingest::raw_document_from_json(nlohmann::json::parse(m.payload));
    // A duplicate forwards the stored article so downstream stages still see
    // it after a redelivery.
    auto outcome = ingestor.ingest_one(doc);
    return std::vector<std::string>{article_message(outcome.article)};
  };

  Handler categorize = article_handler([d](Article& a) {
    const auto& model = d->models.section;
    if (!a.section && model && model->fitted()) a.section = model->categorize(a);
  });

  Handler propaganda = article_handler([d](Article& a) {
    const auto& model = d->models.propaganda;
    if (!a.propaganda && model && model->fitted()) a.propaganda = model->score(a);
  });

  Handler frame = article_handler([d](Article& a) {
    if (!a.frame_distribution && d->models.frames) {
      a.frame_distribution = d->models.frames->classify(a.body);
    }
  });

  Handler stance = article_handler([d](Article& a) {
    if (!d->models.stance) return;
    for (const auto& c : d->models.claims) {
      if (a.stances.count(c.id)) continue;
      a.stances[c.id] = d->models.stance->classify(a.body, c.text);
    }
  });

  Handler annotate = [d](const Message& m) {
    Article a = article_from_message(m.payload);
    ingest::Annotations ann;
    ann.section = a.section;
    ann.propaganda = a.propaganda;
    ann.stances = a.stances;
    ann.frame_distribution = a.frame_distribution;
    d->store->annotate(a.id, ann);
    return std::vector<std::string>{nlohmann::json{{"id", a.id}}.dump()};
  };

  return {make_stage("fetch", std::move(fetch), settings),
          make_stage("ingest", std::move(ingest), settings),
          make_stage("categorize", std::move(categorize), settings),
          make_stage("propaganda", std::move(propaganda), settings),
          make_stage("frame", std::move(frame), settings),
          make_stage("stance", std::move(stance), settings),
          make_stage("store-annotate", std::move(annotate), settings)};
}

}  // namespace newsdesk::pipeline
