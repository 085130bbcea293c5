#pragma once

#include <map>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

namespace newsdesk::clustering {

struct Scores {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
};

nlohmann::json to_json(const Scores& s);

/// Label vectors: item i is in cluster predicted[i] and gold[i]. Throws
/// PartitionMismatch when the sizes differ. Empty input scores 1.
Scores bcubed_f1(std::span<const std::size_t> predicted, std::span<const std::size_t> gold);
/// Over unordered pairs, co-membership as the positive class. Precision is 1
/// when nothing is predicted together, recall 1 when nothing is gold together.
Scores pairwise_f1(std::span<const std::size_t> predicted, std::span<const std::size_t> gold);

/// Keyed forms: item -> cluster label. The key sets must match.
Scores bcubed_f1(const std::map<std::string, std::string>& predicted,
                 const std::map<std::string, std::string>& gold);
Scores pairwise_f1(const std::map<std::string, std::string>& predicted,
                   const std::map<std::string, std::string>& gold);

}  // namespace newsdesk::clustering
