#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "newsdesk/model/article.hpp"

namespace newsdesk::profiles {

/// Citations of one medium on one topic by the two user groups, with the
/// groups' totals on that topic across all media. C0 is the right-leaning
/// group.
struct GroupCitationCounts {
  MediumId medium_id;
  std::string topic_id;
  std::uint64_t tf_c0 = 0;
  std::uint64_t tf_c1 = 0;
  std::uint64_t total_c0 = 0;
  std::uint64_t total_c1 = 0;

  friend bool operator==(const GroupCitationCounts&, const GroupCitationCounts&) = default;
};

/// V = 2 r0 / (r0 + r1) - 1 with r = tf / total, evaluated as
/// (r0 - r1) / (r0 + r1), which is the same value and makes swapping the
/// groups negate the result exactly. Throws UndefinedValence for a zero total
/// or when both tf are zero, InvariantViolation when tf exceeds its total.
double valence(const GroupCitationCounts& c);

/// Five equal ranges over [-1, 1], lower bounds inclusive and the top range
/// closed at 1. With `c0_is_right` false the score is negated first. Throws
/// RangeError outside [-1, 1] (and for NaN).
ValenceLabel valence_label(double v, bool c0_is_right = true);

struct ValenceRecord {
  MediumId medium_id;
  std::string topic_id;
  double score = 0.0;
  ValenceLabel label = ValenceLabel::center;

  friend bool operator==(const ValenceRecord&, const ValenceRecord&) = default;
};

nlohmann::json to_json(const ValenceRecord& r);

enum class UserGroup { left, right };

struct CitationRow {
  std::string user_id;
  UserGroup group = UserGroup::left;
  MediumId medium_id;
  std::string topic_id;
  std::uint64_t count = 0;
};

/// CSV with header `user_id,group,medium_id,topic_id,count`; group is
/// `left` or `right`. Throws ConfigError with the line number on bad rows.
std::vector<CitationRow> parse_citations_csv(std::string_view content);
std::vector<CitationRow> load_citations_csv(const std::filesystem::path& path);

/// Per (medium, topic) counts; totals are per topic across all media. Sorted
/// by medium then topic.
std::vector<GroupCitationCounts> aggregate_citations(const std::vector<CitationRow>& rows);

struct ValenceConfig {
  std::uint64_t min_citations = 10;  // tf_c0 + tf_c1
  bool c0_is_right = true;
};

/// Records for every count with enough citations and a defined valence.
std::vector<ValenceRecord> valence_records(const std::vector<GroupCitationCounts>& counts,
                                           const ValenceConfig& config = {});

}  // namespace newsdesk::profiles
