#include "newsdesk/clustering/params.hpp"

#include <cmath>
#include <string>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::clustering {

void ClusteringParams::validate() const {
  if (window_days <= 0 || window_overlap_days <= 0 || window_overlap_days >= window_days) {
    throw ConfigError("clustering: need 0 < window_overlap_days < window_days, got " +
                      std::to_string(window_overlap_days) + " and " + std::to_string(window_days));
  }
  auto unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  if (!unit(t1)) throw ConfigError("clustering: t1 must lie in [0, 1]");
  if (!unit(t2)) throw ConfigError("clustering: t2 must lie in [0, 1]");
  if (louvain_restarts == 0) throw ConfigError("clustering: louvain_restarts must be at least 1");
  if (min_df == 0) throw ConfigError("clustering: min_df must be at least 1");
}

nlohmann::json to_json(const ClusteringParams& p) {
  return {{"window_days", p.window_days},
          {"window_overlap_days", p.window_overlap_days},
          {"t1", p.t1},
          {"t2", p.t2},
          {"min_df", p.min_df},
          {"seed", p.seed},
          {"weighted_edges", p.weighted_edges},
          {"louvain_restarts", p.louvain_restarts}};
}

ClusteringParams params_from_json(const nlohmann::json& j) {
  ClusteringParams p;
  try {
    p.window_days = j.value("window_days", p.window_days);
    p.window_overlap_days = j.value("window_overlap_days", p.window_overlap_days);
    p.t1 = j.value("t1", p.t1);
    p.t2 = j.value("t2", p.t2);
    p.min_df = j.value("min_df", p.min_df);
    p.seed = j.value("seed", p.seed);
    p.weighted_edges = j.value("weighted_edges", p.weighted_edges);
    p.louvain_restarts = j.value("louvain_restarts", p.louvain_restarts);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("clustering params: ") + e.what());
  }
  p.validate();
  return p;
}

}  // namespace newsdesk::clustering
