#include "corpus.hpp"

#include <random>
#include <string>

#include "newsdesk/common/time.hpp"

namespace newsdesk::bench {

namespace {

std::string word(std::size_t topic, std::size_t i) {
  std::string w;
  std::size_t x = topic * 7919 + i * 104729 + 17;
  for (int k = 0; k < 7; ++k) {
    w += static_cast<char>('a' + x % 26);
    x /= 26;
    x += topic + i + static_cast<std::size_t>(k);
  }
  return w;
}

}  // namespace

std::vector<Article> make_corpus(std::size_t n, std::size_t topics, int days, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Article> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t t = i % topics;
    std::string body;
    for (int k = 0; k < 60; ++k) {
      const bool noise = rng() % 10 == 0;
      body += word(noise ? topics : t, rng() % (noise ? 200 : 50));
      body += ' ';
    }
    Article a;
    a.canonical_url = "https://bench.example/" + std::to_string(i);
    a.id = article_id_for(a.canonical_url);
    a.medium_id = "m" + std::to_string(i % 8);
    a.title = word(t, rng() % 50) + " " + word(t, rng() % 50);
    a.body = std::move(body);
    a.published_at = from_unix(1556668800 + static_cast<std::int64_t>(rng() % (days * 86400ull)));
    a.fetched_at = a.published_at;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace newsdesk::bench
