#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace newsdesk::ingest {

/// URI reference split into its five generic components. Absent and empty
/// components are distinguished, which reference resolution needs.
struct Url {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;

  bool is_absolute() const { return scheme.has_value(); }
  std::string to_string() const;

  friend bool operator==(const Url&, const Url&) = default;
};

/// Splits any URI reference. Throws InvalidUrl on white space or control
/// characters, or a malformed scheme.
Url parse_url_reference(std::string_view text);

/// Parses an absolute http(s)-style URL with a non-empty host.
Url parse_absolute_url(std::string_view text);

/// Reference resolution against an absolute base (remove_dot_segments and
/// merge included).
std::string resolve_url(std::string_view base, std::string_view reference);

/// Lower-cases scheme and host, drops the default port, the fragment, empty
/// query parameters and tracking parameters (utm_*, fbclid, gclid), and
/// sorts the remaining parameters by key. An empty path becomes "/".
/// Throws InvalidUrl for unparseable input. Idempotent.
std::string canonicalize_url(std::string_view url);

/// Lower-cased host of an absolute URL, without port or userinfo.
std::string url_host(std::string_view url);

}  // namespace newsdesk::ingest
