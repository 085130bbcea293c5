#include "newsdesk/ingest/html.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "newsdesk/ingest/xml.hpp"

namespace newsdesk::ingest {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_raw_text(std::string_view name) {
  return name == "script" || name == "style" || name == "noscript" || name == "template";
}

bool icase_starts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (s.size() - pos < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[pos + i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

const std::string* HtmlToken::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool is_void_element(std::string_view name) {
  static constexpr std::array<std::string_view, 14> kVoid = {
      "area", "base", "br", "col", "embed", "hr", "img", "input", "link", "meta",
      "param", "source", "track", "wbr"};
  return std::find(kVoid.begin(), kVoid.end(), name) != kVoid.end();
}

std::vector<HtmlToken> tokenize_html(std::string_view html) {
  std::vector<HtmlToken> out;
  std::string text;
  auto flush_text = [&] {
    if (!text.empty()) {
      HtmlToken t;
      t.text = decode_entities(text);
      out.push_back(std::move(t));
      text.clear();
    }
  };

  std::size_t i = 0;
  const std::size_t n = html.size();
  while (i < n) {
    if (html[i] != '<') {
      text.push_back(html[i++]);
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      auto end = html.find("-->", i + 4);
      i = end == std::string_view::npos ? n : end + 3;
      continue;
    }
    if (i + 1 < n && (html[i + 1] == '!' || html[i + 1] == '?')) {
      auto end = html.find('>', i);
      i = end == std::string_view::npos ? n : end + 1;
      continue;
    }
    const bool closing = i + 1 < n && html[i + 1] == '/';
    std::size_t j = i + (closing ? 2 : 1);
    if (j >= n || !std::isalpha(static_cast<unsigned char>(html[j]))) {
      text.push_back(html[i++]);
      continue;
    }
    flush_text();
    std::size_t name_start = j;
    while (j < n && (std::isalnum(static_cast<unsigned char>(html[j])) || html[j] == '-' ||
                     html[j] == ':')) {
      ++j;
    }
    HtmlToken tok;
    tok.kind = closing ? HtmlToken::Kind::end_tag : HtmlToken::Kind::start_tag;
    tok.name = lower(html.substr(name_start, j - name_start));

    // Attributes.
    while (j < n && html[j] != '>') {
      if (std::isspace(static_cast<unsigned char>(html[j]))) {
        ++j;
        continue;
      }
      if (html[j] == '/') {
        tok.self_closing = true;
        ++j;
        continue;
      }
      std::size_t k = j;
      while (k < n && !std::isspace(static_cast<unsigned char>(html[k])) && html[k] != '=' &&
             html[k] != '>' && html[k] != '/') {
        ++k;
      }
      std::string key = lower(html.substr(j, k - j));
      j = k;
      while (j < n && std::isspace(static_cast<unsigned char>(html[j]))) ++j;
      std::string value;
      if (j < n && html[j] == '=') {
        ++j;
        while (j < n && std::isspace(static_cast<unsigned char>(html[j]))) ++j;
        if (j < n && (html[j] == '"' || html[j] == '\'')) {
          const char q = html[j++];
          auto end = html.find(q, j);
          if (end == std::string_view::npos) end = n;
          value = decode_entities(html.substr(j, end - j));
          j = end < n ? end + 1 : n;
        } else {
          std::size_t vs = j;
          while (j < n && !std::isspace(static_cast<unsigned char>(html[j])) && html[j] != '>') ++j;
          value = decode_entities(html.substr(vs, j - vs));
        }
      }
      if (!key.empty()) tok.attributes.emplace_back(std::move(key), std::move(value));
    }
    i = j < n ? j + 1 : n;

    if (!closing && is_raw_text(tok.name) && !tok.self_closing) {
      // Skip to the matching close tag.
      std::size_t k = i;
      const std::string close = "</" + tok.name;
      while (k < n && !icase_starts_with(html, k, close)) ++k;
      auto end = html.find('>', k);
      i = end == std::string_view::npos ? n : end + 1;
      continue;
    }
    out.push_back(std::move(tok));
  }
  flush_text();
  return out;
}

}  // namespace newsdesk::ingest
