#include "newsdesk/clustering/windows.hpp"

#include <algorithm>

namespace newsdesk::clustering {

std::vector<Window> make_windows(std::span<const DatedId> items, const ClusteringParams& params) {
  params.validate();
  if (items.empty()) return {};
  const auto [lo, hi] = std::minmax_element(items.begin(), items.end(),
                                            [](const auto& a, const auto& b) { return a.at < b.at; });
  const std::int64_t anchor = to_unix(utc_midnight(lo->at));
  const std::int64_t step = std::int64_t{params.step_days()} * kSecondsPerDay;
  const std::int64_t span = std::int64_t{params.window_days} * kSecondsPerDay;
  const auto last = static_cast<std::size_t>((to_unix(hi->at) - anchor) / step);

  std::vector<Window> windows(last + 1);
  for (std::size_t k = 0; k <= last; ++k) {
    windows[k].index = k;
    windows[k].start = from_unix(anchor + static_cast<std::int64_t>(k) * step);
    windows[k].end = from_unix(anchor + static_cast<std::int64_t>(k) * step + span);
  }
  for (const auto& item : items) {
    const std::int64_t d = to_unix(item.at) - anchor;
    // k * step <= d < k * step + span
    const std::int64_t k_hi = d / step;
    std::int64_t k_lo = d - span < 0 ? 0 : (d - span) / step + 1;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      windows[static_cast<std::size_t>(k)].article_ids.push_back(item.id);
    }
  }
  return windows;
}

std::vector<Window> make_windows(std::span<const Article> articles, const ClusteringParams& params) {
  std::vector<DatedId> items;
  items.reserve(articles.size());
  for (const auto& a : articles) items.push_back({a.id, a.published_at});
  return make_windows(items, params);
}

}  // namespace newsdesk::clustering
