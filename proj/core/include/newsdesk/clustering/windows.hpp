#pragma once

#include <span>
#include <vector>

#include "newsdesk/clustering/params.hpp"
#include "newsdesk/model/article.hpp"

namespace newsdesk::clustering {

struct DatedId {
  ArticleId id;
  Timestamp at;
};

/// Half-open [start, end) span of `window_days` days.
struct Window {
  std::size_t index = 0;
  Timestamp start{};
  Timestamp end{};
  std::vector<ArticleId> article_ids;  // input order

  bool covers(Timestamp t) const noexcept { return start <= t && t < end; }
};

/// Windows k = 0..K start at anchor + k * step days, where the anchor is UTC
/// midnight of the earliest timestamp and K is the last window that starts
/// at or before the latest one. Windows with no articles are kept so that
/// indices map directly to dates. Empty input gives no windows.
std::vector<Window> make_windows(std::span<const DatedId> items, const ClusteringParams& params);
std::vector<Window> make_windows(std::span<const Article> articles, const ClusteringParams& params);

}  // namespace newsdesk::clustering
