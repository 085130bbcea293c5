#include <gtest/gtest.h>

#include <algorithm>

#include "newsdesk/clustering/windows.hpp"
#include "newsdesk/common/errors.hpp"

using namespace newsdesk;
using namespace newsdesk::clustering;

namespace {

constexpr std::int64_t kDay0 = 1556668800;  // 2019-05-01T00:00:00Z

// Window membership by brute force: article at offset d (seconds from the
// anchor) belongs to window k iff 3k days <= d < 3k + 6 days.
std::vector<std::size_t> expected_windows(std::int64_t d) {
  std::vector<std::size_t> out;
  for (std::int64_t k = 0; k * 3 * 86400 <= d; ++k) {
    if (d < k * 3 * 86400 + 6 * 86400) out.push_back(static_cast<std::size_t>(k));
  }
  return out;
}

std::vector<std::size_t> windows_of(const std::vector<Window>& ws, const std::string& id) {
  std::vector<std::size_t> out;
  for (const auto& w : ws) {
    if (std::find(w.article_ids.begin(), w.article_ids.end(), id) != w.article_ids.end()) {
      out.push_back(w.index);
    }
  }
  return out;
}

}  // namespace

TEST(Windows, EmptyInputGivesNoWindows) {
  EXPECT_TRUE(make_windows(std::span<const DatedId>{}, ClusteringParams{}).empty());
}

TEST(Windows, DayFourFallsInFirstTwoWindows) {
  std::vector<DatedId> items{{"a", from_unix(kDay0 + 3600)}, {"b", from_unix(kDay0 + 4 * 86400 + 5)}};
  const auto ws = make_windows(items, ClusteringParams{});
  ASSERT_EQ(ws.size(), 2u);
  EXPECT_EQ(ws[0].start, from_unix(kDay0));
  EXPECT_EQ(ws[0].end, from_unix(kDay0 + 6 * 86400));
  EXPECT_EQ(ws[1].start, from_unix(kDay0 + 3 * 86400));
  EXPECT_EQ(windows_of(ws, "b"), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(windows_of(ws, "a"), (std::vector<std::size_t>{0}));
}

TEST(Windows, AnchorIsMidnightOfEarliestArticle) {
  std::vector<DatedId> items{{"late", from_unix(kDay0 + 86400 * 2 + 7000)},
                             {"early", from_unix(kDay0 + 50000)}};
  const auto ws = make_windows(items, ClusteringParams{});
  EXPECT_EQ(ws.front().start, from_unix(kDay0));
}

TEST(Windows, MembershipMatchesBruteForceAndAtMostTwo) {
  std::vector<DatedId> items;
  for (std::int64_t s = 0; s < 20 * 86400; s += 3 * 3600 + 17) {
    items.push_back({std::to_string(s), from_unix(kDay0 + s)});
  }
  const auto ws = make_windows(items, ClusteringParams{});
  for (const auto& it : items) {
    const auto got = windows_of(ws, it.id);
    EXPECT_EQ(got, expected_windows(to_unix(it.at) - kDay0)) << it.id;
    EXPECT_GE(got.size(), 1u);
    EXPECT_LE(got.size(), 2u);
  }
}

TEST(Windows, WindowBoundaryIsHalfOpen) {
  std::vector<DatedId> items{{"a", from_unix(kDay0)}, {"edge", from_unix(kDay0 + 6 * 86400)}};
  const auto ws = make_windows(items, ClusteringParams{});
  EXPECT_EQ(windows_of(ws, "edge"), (std::vector<std::size_t>{1, 2}));
}

TEST(Windows, RejectsBadOverlap) {
  ClusteringParams p;
  p.window_overlap_days = 6;
  std::vector<DatedId> items{{"a", from_unix(kDay0)}};
  EXPECT_THROW(make_windows(items, p), ConfigError);
  p.window_overlap_days = 0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.t1 = 1.5;
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(Windows, ParamsJsonRoundTrip) {
  ClusteringParams p;
  p.t1 = 0.4;
  p.seed = 9;
  p.weighted_edges = false;
  EXPECT_EQ(params_from_json(to_json(p)), p);
  EXPECT_EQ(params_from_json(nlohmann::json::object()), ClusteringParams{});
}
