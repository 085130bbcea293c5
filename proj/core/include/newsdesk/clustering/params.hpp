#pragma once

#include <cstddef>
#include <cstdint>

#include <nlohmann/json.hpp>

namespace newsdesk::clustering {

struct ClusteringParams {
  int window_days = 6;
  int window_overlap_days = 3;
  double t1 = 0.31;  // edge threshold inside a window
  double t2 = 0.8;   // topic merge threshold
  std::size_t min_df = 2;
  std::uint64_t seed = 0;
  bool weighted_edges = true;  // false: every edge has weight 1
  std::size_t louvain_restarts = 16;

  int step_days() const noexcept { return window_days - window_overlap_days; }

  /// Throws ConfigError unless 0 < overlap < window_days and t1, t2 in [0, 1].
  void validate() const;

  friend bool operator==(const ClusteringParams&, const ClusteringParams&) = default;
};

nlohmann::json to_json(const ClusteringParams& p);
/// Missing keys keep their defaults. Validates.
ClusteringParams params_from_json(const nlohmann::json& j);

}  // namespace newsdesk::clustering
