#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace newsdesk {

using Timestamp = std::chrono::sys_seconds;

inline constexpr std::int64_t kSecondsPerDay = 86400;

Timestamp from_unix(std::int64_t seconds);
std::int64_t to_unix(Timestamp t);

/// Start of the UTC day containing `t`.
Timestamp utc_midnight(Timestamp t);

/// "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso8601(Timestamp t);

/// RFC 3339 / ISO 8601 date-time with optional fractional seconds and a `Z`
/// or numeric offset. A bare date ("2019-05-01") is accepted as midnight UTC.
std::optional<Timestamp> parse_iso8601(std::string_view text);

/// RFC 822 / RFC 2822 dates as used by RSS `pubDate`, e.g.
/// "Tue, 10 Jun 2003 04:00:00 GMT" or "10 Jun 2003 04:00:00 +0200".
std::optional<Timestamp> parse_rfc822(std::string_view text);

/// Tries RFC 3339 first, then RFC 822.
std::optional<Timestamp> parse_any_date(std::string_view text);

}  // namespace newsdesk
