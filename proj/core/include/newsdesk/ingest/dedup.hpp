#pragma once

#include <cstdint>
#include <string_view>

#include "newsdesk/model/article.hpp"

namespace newsdesk::ingest {

/// Two articles are duplicates when either component matches.
struct DedupKey {
  std::uint64_t url_hash = 0;
  std::uint64_t content_fingerprint = 0;

  bool matches(const DedupKey& other) const noexcept {
    return url_hash == other.url_hash || content_fingerprint == other.content_fingerprint;
  }
  friend bool operator==(const DedupKey&, const DedupKey&) = default;
};

/// FNV-1a 64 over case-folded, whitespace-collapsed "title\nbody".
std::uint64_t content_fingerprint(std::string_view title, std::string_view body);

DedupKey dedup_key(const Article& article);

/// Birthday bound n(n-1)/2 * 2^-bits on the probability that any two of `n`
/// random `bits`-bit hashes collide.
double collision_probability_bound(double n, int bits);

}  // namespace newsdesk::ingest
