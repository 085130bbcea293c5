#include "newsdesk/ingest/url.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "newsdesk/common/errors.hpp"

namespace newsdesk::ingest {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool valid_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
  });
}

std::string remove_dot_segments(std::string_view input) {
  std::string in(input);
  std::string out;
  while (!in.empty()) {
    if (in.rfind("../", 0) == 0) {
      in.erase(0, 3);
    } else if (in.rfind("./", 0) == 0) {
      in.erase(0, 2);
    } else if (in.rfind("/./", 0) == 0) {
      in.replace(0, 3, "/");
    } else if (in == "/.") {
      in = "/";
    } else if (in.rfind("/../", 0) == 0 || in == "/..") {
      in = in.size() == 3 ? std::string("/") : in.substr(3);
      auto pos = out.rfind('/');
      out.erase(pos == std::string::npos ? 0 : pos);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      std::size_t start = in[0] == '/' ? 1 : 0;
      auto next = in.find('/', start);
      if (next == std::string::npos) next = in.size();
      out += in.substr(0, next);
      in.erase(0, next);
    }
  }
  return out;
}

struct Authority {
  std::string userinfo;
  std::string host;
  std::optional<std::string> port;
};

Authority split_authority(std::string_view auth) {
  Authority a;
  if (auto at = auth.rfind('@'); at != std::string_view::npos) {
    a.userinfo = std::string(auth.substr(0, at));
    auth.remove_prefix(at + 1);
  }
  if (!auth.empty() && auth[0] == '[') {
    auto close = auth.find(']');
    if (close == std::string_view::npos) throw InvalidUrl("unterminated IPv6 host");
    a.host = std::string(auth.substr(0, close + 1));
    auth.remove_prefix(close + 1);
    if (!auth.empty()) {
      if (auth[0] != ':') throw InvalidUrl("garbage after IPv6 host");
      a.port = std::string(auth.substr(1));
    }
  } else if (auto colon = auth.rfind(':'); colon != std::string_view::npos) {
    a.host = std::string(auth.substr(0, colon));
    a.port = std::string(auth.substr(colon + 1));
  } else {
    a.host = std::string(auth);
  }
  if (a.port) {
    if (!std::all_of(a.port->begin(), a.port->end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        a.port->size() > 5) {
      throw InvalidUrl("bad port '" + *a.port + "'");
    }
    if (a.port->empty()) a.port.reset();
  }
  return a;
}

std::optional<std::string> default_port(std::string_view scheme) {
  if (scheme == "http" || scheme == "ws") return "80";
  if (scheme == "https" || scheme == "wss") return "443";
  if (scheme == "ftp") return "21";
  return std::nullopt;
}

bool is_tracking_param(std::string_view key) {
  const std::string k = lower(key);
  return k.rfind("utm_", 0) == 0 || k == "fbclid" || k == "gclid";
}

}  // namespace

std::string Url::to_string() const {
  std::string out;
  if (scheme) out += *scheme + ":";
  if (authority) out += "//" + *authority;
  out += path;
  if (query) out += "?" + *query;
  if (fragment) out += "#" + *fragment;
  return out;
}

Url parse_url_reference(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c <= 0x20 || c == 0x7F) throw InvalidUrl("white space or control character in URL");
  }
  Url u;
  std::string_view rest = text;
  const auto colon = rest.find(':');
  const auto first_delim = rest.find_first_of("/?#");
  if (colon != std::string_view::npos && (first_delim == std::string_view::npos || colon < first_delim)) {
    auto scheme = rest.substr(0, colon);
    if (!valid_scheme(scheme)) throw InvalidUrl("bad scheme in '" + std::string(text) + "'");
    u.scheme = std::string(scheme);
    rest.remove_prefix(colon + 1);
  }
  if (auto hash = rest.find('#'); hash != std::string_view::npos) {
    u.fragment = std::string(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  if (auto q = rest.find('?'); q != std::string_view::npos) {
    u.query = std::string(rest.substr(q + 1));
    rest = rest.substr(0, q);
  }
  if (rest.rfind("//", 0) == 0) {
    rest.remove_prefix(2);
    auto slash = rest.find('/');
    if (slash == std::string_view::npos) slash = rest.size();
    u.authority = std::string(rest.substr(0, slash));
    rest.remove_prefix(slash);
  }
  u.path = std::string(rest);
  return u;
}

Url parse_absolute_url(std::string_view text) {
  Url u = parse_url_reference(text);
  if (!u.scheme) throw InvalidUrl("URL is not absolute: '" + std::string(text) + "'");
  if (!u.authority) throw InvalidUrl("URL has no host: '" + std::string(text) + "'");
  const Authority a = split_authority(*u.authority);
  if (a.host.empty()) throw InvalidUrl("URL has an empty host: '" + std::string(text) + "'");
  return u;
}

std::string resolve_url(std::string_view base_text, std::string_view reference) {
  const Url base = parse_url_reference(base_text);
  if (!base.scheme) throw InvalidUrl("base URL is not absolute");
  const Url r = parse_url_reference(reference);
  Url t;
  if (r.scheme) {
    t = r;
    t.path = remove_dot_segments(r.path);
  } else {
    if (r.authority) {
      t.authority = r.authority;
      t.path = remove_dot_segments(r.path);
      t.query = r.query;
    } else {
      if (r.path.empty()) {
        t.path = base.path;
        t.query = r.query ? r.query : base.query;
      } else {
        if (r.path[0] == '/') {
          t.path = remove_dot_segments(r.path);
        } else {
          std::string merged;
          if (base.authority && base.path.empty()) {
            merged = "/" + r.path;
          } else {
            auto slash = base.path.rfind('/');
            merged = (slash == std::string::npos ? std::string() : base.path.substr(0, slash + 1)) +
                     r.path;
          }
          t.path = remove_dot_segments(merged);
        }
        t.query = r.query;
      }
      t.authority = base.authority;
    }
    t.scheme = base.scheme;
  }
  t.fragment = r.fragment;
  return t.to_string();
}

std::string canonicalize_url(std::string_view text) {
  Url u = parse_absolute_url(text);
  const std::string scheme = lower(*u.scheme);
  Authority a = split_authority(*u.authority);
  std::string authority;
  if (!a.userinfo.empty()) authority += a.userinfo + "@";
  authority += lower(a.host);
  if (a.port) {
    // Strip leading zeros so ":0443" and ":443" agree.
    auto p = a.port->find_first_not_of('0');
    std::string port = p == std::string::npos ? "0" : a.port->substr(p);
    if (port != default_port(scheme)) authority += ":" + port;
  }
  std::string path = u.path.empty() ? "/" : remove_dot_segments(u.path);
  if (path.empty()) path = "/";

  std::optional<std::string> query;
  if (u.query) {
    std::vector<std::pair<std::string, std::string>> params;
    std::string_view q = *u.query;
    while (!q.empty()) {
      auto amp = q.find('&');
      auto part = q.substr(0, amp);
      q = amp == std::string_view::npos ? std::string_view{} : q.substr(amp + 1);
      if (part.empty()) continue;
      auto eq = part.find('=');
      std::string key(part.substr(0, eq));
      std::string value = eq == std::string_view::npos ? std::string() : std::string(part.substr(eq));
      if (key.empty() || is_tracking_param(key)) continue;
      params.emplace_back(std::move(key), std::move(value));
    }
    std::stable_sort(params.begin(), params.end());
    if (!params.empty()) {
      std::string joined;
      for (const auto& [k, v] : params) {
        if (!joined.empty()) joined += '&';
        joined += k + v;
      }
      query = std::move(joined);
    }
  }
  Url out;
  out.scheme = scheme;
  out.authority = authority;
  out.path = std::move(path);
  out.query = std::move(query);
  return out.to_string();
}

std::string url_host(std::string_view url) {
  const Url u = parse_absolute_url(url);
  return lower(split_authority(*u.authority).host);
}

}  // namespace newsdesk::ingest
