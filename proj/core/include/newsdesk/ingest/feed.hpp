#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newsdesk/common/time.hpp"

namespace newsdesk::ingest {

enum class FeedKind { rss, atom, list_page };

/// "rss", "atom" or "list-page"; anything else throws UnsupportedKind.
FeedKind parse_feed_kind(std::string_view name);
std::string_view to_string(FeedKind kind);

struct FeedEntry {
  std::string title;
  std::string link;  // absolute
  std::optional<Timestamp> published_at;

  friend bool operator==(const FeedEntry&, const FeedEntry&) = default;
};

/// One entry per feed item that carries a link, in document order, links
/// resolved against `feed_url`. RSS 2.0 and RSS 1.0 (RDF) are accepted for
/// `rss`; list pages yield every same-host anchor with visible text.
/// Malformed XML throws ParseError with the byte offset.
std::vector<FeedEntry> parse_feed(std::string_view raw, FeedKind kind, std::string_view feed_url);

}  // namespace newsdesk::ingest
