#include "newsdesk/common/time.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <string>

namespace newsdesk {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2 ? 1 : 0;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

Civil civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2 ? 1 : 0), m, d};
}

bool valid_date(std::int64_t y, unsigned m, unsigned d) {
  static constexpr std::array<unsigned, 12> kDays = {31, 29, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};
  if (m < 1 || m > 12 || d < 1) return false;
  if (d > kDays[m - 1]) return false;
  if (m == 2 && d == 29) {
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (!leap) return false;
  }
  return true;
}

std::optional<Timestamp> make_time(std::int64_t y, unsigned mo, unsigned d, unsigned h,
                                   unsigned mi, unsigned s, std::int64_t offset_seconds) {
  if (!valid_date(y, mo, d) || h > 23 || mi > 59 || s > 60) return std::nullopt;
  const std::int64_t secs = days_from_civil(y, mo, d) * kSecondsPerDay + h * 3600 +
                            mi * 60 + s - offset_seconds;
  return from_unix(secs);
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::optional<std::int64_t> digits(std::size_t min_len, std::size_t max_len) {
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (!done() && pos_ - start < max_len &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ - start < min_len) return std::nullopt;
    return v;
  }
  std::string_view word() {
    std::size_t start = pos_;
    while (!done() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<unsigned> month_from_name(std::string_view name) {
  static constexpr std::array<std::string_view, 12> kMonths = {
      "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"};
  if (name.size() < 3) return std::nullopt;
  const std::string l = lower(name.substr(0, 3));
  for (unsigned i = 0; i < kMonths.size(); ++i) {
    if (kMonths[i] == l) return i + 1;
  }
  return std::nullopt;
}

std::optional<std::int64_t> zone_offset(std::string_view zone) {
  const std::string z = lower(zone);
  if (z == "gmt" || z == "ut" || z == "utc" || z == "z") return 0;
  if (z == "est") return -5 * 3600;
  if (z == "edt") return -4 * 3600;
  if (z == "cst") return -6 * 3600;
  if (z == "cdt") return -5 * 3600;
  if (z == "mst") return -7 * 3600;
  if (z == "mdt") return -6 * 3600;
  if (z == "pst") return -8 * 3600;
  if (z == "pdt") return -7 * 3600;
  return std::nullopt;
}

}  // namespace

Timestamp from_unix(std::int64_t seconds) {
  return Timestamp{std::chrono::seconds{seconds}};
}

std::int64_t to_unix(Timestamp t) { return t.time_since_epoch().count(); }

Timestamp utc_midnight(Timestamp t) {
  std::int64_t s = to_unix(t);
  std::int64_t day = s >= 0 ? s / kSecondsPerDay : (s - kSecondsPerDay + 1) / kSecondsPerDay;
  return from_unix(day * kSecondsPerDay);
}

std::string format_iso8601(Timestamp t) {
  const std::int64_t s = to_unix(t);
  std::int64_t day = s >= 0 ? s / kSecondsPerDay : (s - kSecondsPerDay + 1) / kSecondsPerDay;
  std::int64_t rem = s - day * kSecondsPerDay;
  const Civil c = civil_from_days(day);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(c.year), c.month, c.day,
                static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

std::optional<Timestamp> parse_iso8601(std::string_view text) {
  Cursor c(text);
  c.skip_spaces();
  auto y = c.digits(4, 4);
  if (!y || !c.consume('-')) return std::nullopt;
  auto mo = c.digits(2, 2);
  if (!mo || !c.consume('-')) return std::nullopt;
  auto d = c.digits(2, 2);
  if (!d) return std::nullopt;
  c.skip_spaces();
  if (c.done()) {
    return make_time(*y, static_cast<unsigned>(*mo), static_cast<unsigned>(*d), 0, 0, 0, 0);
  }
  if (!c.consume('T') && !c.consume('t') && !c.consume(' ')) return std::nullopt;
  auto h = c.digits(2, 2);
  if (!h || !c.consume(':')) return std::nullopt;
  auto mi = c.digits(2, 2);
  if (!mi) return std::nullopt;
  std::int64_t s = 0;
  if (c.consume(':')) {
    auto sv = c.digits(2, 2);
    if (!sv) return std::nullopt;
    s = *sv;
    if (c.consume('.') || c.consume(',')) {
      if (!c.digits(1, 12)) return std::nullopt;
    }
  }
  std::int64_t offset = 0;
  if (c.consume('Z') || c.consume('z')) {
    offset = 0;
  } else if (c.peek() == '+' || c.peek() == '-') {
    const int sign = c.peek() == '-' ? -1 : 1;
    c.consume(c.peek());
    auto oh = c.digits(2, 2);
    if (!oh) return std::nullopt;
    c.consume(':');
    auto om = c.digits(2, 2);
    offset = sign * (*oh * 3600 + (om ? *om : 0) * 60);
  }
  c.skip_spaces();
  if (!c.done()) return std::nullopt;
  return make_time(*y, static_cast<unsigned>(*mo), static_cast<unsigned>(*d),
                   static_cast<unsigned>(*h), static_cast<unsigned>(*mi),
                   static_cast<unsigned>(s), offset);
}

std::optional<Timestamp> parse_rfc822(std::string_view text) {
  Cursor c(text);
  c.skip_spaces();
  if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
    c.word();  // day name
    c.skip_spaces();
    c.consume(',');
    c.skip_spaces();
  }
  auto d = c.digits(1, 2);
  if (!d) return std::nullopt;
  c.skip_spaces();
  auto mo = month_from_name(c.word());
  if (!mo) return std::nullopt;
  c.skip_spaces();
  auto y = c.digits(2, 4);
  if (!y) return std::nullopt;
  if (*y < 100) *y += *y < 50 ? 2000 : 1900;
  c.skip_spaces();
  std::int64_t h = 0, mi = 0, s = 0;
  if (!c.done()) {
    auto hv = c.digits(1, 2);
    if (!hv || !c.consume(':')) return std::nullopt;
    auto mv = c.digits(2, 2);
    if (!mv) return std::nullopt;
    h = *hv;
    mi = *mv;
    if (c.consume(':')) {
      auto sv = c.digits(2, 2);
      if (!sv) return std::nullopt;
      s = *sv;
    }
  }
  c.skip_spaces();
  std::int64_t offset = 0;
  if (c.peek() == '+' || c.peek() == '-') {
    const int sign = c.peek() == '-' ? -1 : 1;
    c.consume(c.peek());
    auto hhmm = c.digits(4, 4);
    if (!hhmm) return std::nullopt;
    offset = sign * ((*hhmm / 100) * 3600 + (*hhmm % 100) * 60);
  } else if (!c.done()) {
    auto z = zone_offset(c.word());
    if (!z) return std::nullopt;
    offset = *z;
  }
  c.skip_spaces();
  if (!c.done()) return std::nullopt;
  return make_time(*y, *mo, static_cast<unsigned>(*d), static_cast<unsigned>(h),
                   static_cast<unsigned>(mi), static_cast<unsigned>(s), offset);
}

std::optional<Timestamp> parse_any_date(std::string_view text) {
  if (auto t = parse_iso8601(text)) return t;
  return parse_rfc822(text);
}

}  // namespace newsdesk
