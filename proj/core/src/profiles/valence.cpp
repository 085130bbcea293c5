#include "newsdesk/profiles/valence.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::profiles {

double valence(const GroupCitationCounts& c) {
  if (c.tf_c0 > c.total_c0 || c.tf_c1 > c.total_c1) {
    throw InvariantViolation("citation count exceeds its group total");
  }
  if (c.total_c0 == 0 || c.total_c1 == 0) {
    throw UndefinedValence("valence undefined: a group has no citations on the topic");
  }
  if (c.tf_c0 == 0 && c.tf_c1 == 0) {
    throw UndefinedValence("valence undefined: the medium is never cited on the topic");
  }
  const double r0 = static_cast<double>(c.tf_c0) / static_cast<double>(c.total_c0);
  const double r1 = static_cast<double>(c.tf_c1) / static_cast<double>(c.total_c1);
  return (r0 - r1) / (r0 + r1);
}

ValenceLabel valence_label(double v, bool c0_is_right) {
  if (!(v >= -1.0 && v <= 1.0)) throw RangeError("valence outside [-1, 1]");
  if (!c0_is_right) v = -v;
  if (v < -0.6) return ValenceLabel::far_left;
  if (v < -0.2) return ValenceLabel::left;
  if (v < 0.2) return ValenceLabel::center;
  if (v < 0.6) return ValenceLabel::right;
  return ValenceLabel::far_right;
}

nlohmann::json to_json(const ValenceRecord& r) {
  return {{"medium_id", r.medium_id},
          {"topic_id", r.topic_id},
          {"score", r.score},
          {"label", to_string(r.label)}};
}

std::vector<CitationRow> parse_citations_csv(std::string_view content) {
  std::vector<CitationRow> rows;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    auto bad = [&](const std::string& why) {
      return ConfigError("citations line " + std::to_string(lineno) + ": " + why);
    };
    if (cells.size() != 5) throw bad("expected user_id,group,medium_id,topic_id,count");
    CitationRow r;
    r.user_id = cells[0];
    if (cells[1] == "left") {
      r.group = UserGroup::left;
    } else if (cells[1] == "right") {
      r.group = UserGroup::right;
    } else {
      throw bad("group must be left or right");
    }
    r.medium_id = cells[2];
    r.topic_id = cells[3];
    if (r.medium_id.empty() || r.topic_id.empty()) throw bad("empty medium or topic");
    std::size_t used = 0;
    try {
      const long long n = std::stoll(cells[4], &used);
      if (n < 0 || used != cells[4].size()) throw bad("count must be a non-negative integer");
      r.count = static_cast<std::uint64_t>(n);
    } catch (const std::logic_error&) {
      throw bad("count must be a non-negative integer");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<CitationRow> load_citations_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open citations file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_citations_csv(ss.str());
}

std::vector<GroupCitationCounts> aggregate_citations(const std::vector<CitationRow>& rows) {
  std::map<std::pair<MediumId, std::string>, GroupCitationCounts> per;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> totals;  // topic -> (c0, c1)
  for (const auto& r : rows) {
    auto& c = per[{r.medium_id, r.topic_id}];
    c.medium_id = r.medium_id;
    c.topic_id = r.topic_id;
    auto& t = totals[r.topic_id];
    if (r.group == UserGroup::right) {
      c.tf_c0 += r.count;
      t.first += r.count;
    } else {
      c.tf_c1 += r.count;
      t.second += r.count;
    }
  }
  std::vector<GroupCitationCounts> out;
  out.reserve(per.size());
  for (auto& [key, c] : per) {
    std::tie(c.total_c0, c.total_c1) = totals[c.topic_id];
    out.push_back(c);
  }
  return out;
}

std::vector<ValenceRecord> valence_records(const std::vector<GroupCitationCounts>& counts,
                                           const ValenceConfig& config) {
  std::vector<ValenceRecord> out;
  for (const auto& c : counts) {
    if (c.tf_c0 + c.tf_c1 < config.min_citations) continue;
    if (c.total_c0 == 0 || c.total_c1 == 0) continue;
    const double v = valence(c);
    out.push_back({c.medium_id, c.topic_id, v, valence_label(v, config.c0_is_right)});
  }
  return out;
}

}  // namespace newsdesk::profiles
