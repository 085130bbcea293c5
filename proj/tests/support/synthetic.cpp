#include "support/synthetic.hpp"

#include <random>

namespace newsdesk::testing {

namespace {

std::string word(std::string_view prefix, std::size_t n) {
  return std::string(prefix) + std::to_string(n) + "x";
}

}  // namespace

Article make_article(std::string url, std::string title, std::string body, std::int64_t unix_time,
                     std::string medium, Language lang) {
  Article a;
  a.canonical_url = std::move(url);
  a.id = article_id_for(a.canonical_url);
  a.medium_id = std::move(medium);
  a.title = std::move(title);
  a.body = std::move(body);
  a.language = lang;
  a.published_at = from_unix(unix_time);
  a.fetched_at = a.published_at;
  return a;
}

TopicCorpus make_topic_corpus(const TopicCorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const auto span = static_cast<std::uint64_t>(spec.days) * 86400;

  TopicCorpus corpus;
  for (std::size_t t = 0; t < spec.topics; ++t) {
    const std::string prefix = "t" + std::to_string(t) + "w";
    for (std::size_t i = 0; i < spec.per_topic; ++i) {
      std::vector<std::string> tokens;
      for (std::size_t k = 0; k < spec.tokens_per_article; ++k) {
        const bool noise =
            static_cast<double>(rng() % 1000000) / 1e6 < spec.noise_fraction;
        tokens.push_back(noise ? word("nz", pick(spec.noise_vocabulary))
                               : word(prefix, pick(spec.topic_vocabulary)));
      }
      std::string title;
      std::string body;
      for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (k < 6) {
          title += (k ? " " : "") + tokens[k];
        } else {
          body += tokens[k];
          body += (k % 10 == 9) ? ". " : " ";
        }
      }
      const auto when = spec.start_unix + static_cast<std::int64_t>(rng() % span);
      auto a = make_article("https://synthetic.example/topic" + std::to_string(t) + "/" +
                                std::to_string(i),
                            title, body, when, "m" + std::to_string(i % 4));
      corpus.gold[a.id] = "topic" + std::to_string(t);
      corpus.articles.push_back(std::move(a));
    }
  }
  return corpus;
}

std::vector<classifiers::SectionExample> make_section_corpus(const SectionCorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<classifiers::SectionExample> out;
  for (std::size_t i = 0; i < 6 * spec.per_section; ++i) {
    const auto label = from_index<SectionLabel>(i % 6);
    const std::string prefix = "s" + std::to_string(i % 6) + "w";
    std::string text;
    for (std::size_t k = 0; k < spec.tokens_per_doc; ++k) {
      text += u(rng) < spec.shared_fraction ? word("sh", rng() % spec.shared_vocabulary)
                                            : word(prefix, rng() % spec.core_vocabulary);
      text += ' ';
    }
    out.push_back({std::move(text), Language::en, label});
  }
  return out;
}

}  // namespace newsdesk::testing
