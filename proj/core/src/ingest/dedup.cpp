#include "newsdesk/ingest/dedup.hpp"

#include <cmath>

#include "newsdesk/common/hash.hpp"
#include "newsdesk/common/utf8.hpp"

namespace newsdesk::ingest {

std::uint64_t content_fingerprint(std::string_view title, std::string_view body) {
  std::string text(title);
  text += '\n';
  text += body;
  return fnv1a64(utf8::collapse_whitespace(utf8::casefold(text)));
}

DedupKey dedup_key(const Article& article) {
  return {fnv1a64(article.canonical_url), content_fingerprint(article.title, article.body)};
}

double collision_probability_bound(double n, int bits) {
  return n * (n - 1.0) / 2.0 * std::ldexp(1.0, -bits);
}

}  // namespace newsdesk::ingest
