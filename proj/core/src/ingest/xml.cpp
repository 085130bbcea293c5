#include "newsdesk/ingest/xml.hpp"

#include <cctype>
#include <cstdlib>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/utf8.hpp"

namespace newsdesk::ingest {

namespace {

bool is_name_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || c == ':' || u >= 0x80;
}

bool is_name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return is_name_start(c) || std::isdigit(u) || c == '-' || c == '.';
}

struct NamedEntity {
  std::string_view name;
  char32_t cp;
};

constexpr NamedEntity kEntities[] = {
    {"lt", U'<'},     {"gt", U'>'},     {"amp", U'&'},    {"quot", U'"'},
    {"apos", U'\''},  {"nbsp", 0xA0},   {"mdash", 0x2014}, {"ndash", 0x2013},
    {"hellip", 0x2026}, {"rsquo", 0x2019}, {"lsquo", 0x2018}, {"rdquo", 0x201D},
    {"ldquo", 0x201C}, {"copy", 0xA9},  {"reg", 0xAE},    {"eacute", 0xE9},
};

class Parser {
 public:
  explicit Parser(std::string_view doc) : doc_(doc) {}

  XmlElement parse_document() {
    if (doc_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    skip_misc();
    if (at_end() || peek() != '<') fail("expected root element");
    XmlElement root = parse_element();
    skip_misc();
    if (!at_end()) fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= doc_.size(); }
  char peek() const { return doc_[pos_]; }
  bool starts_with(std::string_view s) const { return doc_.substr(pos_, s.size()) == s; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void skip_until(std::string_view terminator, const char* what) {
    auto end = doc_.find(terminator, pos_);
    if (end == std::string_view::npos) fail(std::string("unterminated ") + what);
    pos_ = end + terminator.size();
  }

  // Prolog / epilog: white space, comments, PIs, DOCTYPE.
  void skip_misc() {
    while (true) {
      skip_ws();
      if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<!DOCTYPE") || starts_with("<!doctype")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  void skip_doctype() {
    int depth = 0;
    while (!at_end()) {
      char c = doc_[pos_++];
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth <= 0) return;
    }
    fail("unterminated DOCTYPE");
  }

  std::string parse_name() {
    if (at_end() || !is_name_start(peek())) fail("expected a name");
    const auto start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    return std::string(doc_.substr(start, pos_ - start));
  }

  std::string parse_reference() {
    const auto start = pos_;
    ++pos_;  // '&'
    auto semi = doc_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 32) {
      // Bare ampersand: keep it, as most feed readers do.
      return "&";
    }
    auto ref = doc_.substr(pos_, semi - pos_);
    if (!ref.empty() && ref[0] == '#') {
      char* endp = nullptr;
      std::string digits(ref.substr(1));
      unsigned long cp = 0;
      if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
        cp = std::strtoul(digits.c_str() + 1, &endp, 16);
      } else {
        cp = std::strtoul(digits.c_str(), &endp, 10);
      }
      if (digits.empty() || endp == nullptr || *endp != '\0' || cp == 0 || cp > 0x10FFFF) {
        pos_ = start;
        fail("bad character reference");
      }
      pos_ = semi + 1;
      return utf8::encode(static_cast<char32_t>(cp));
    }
    for (const auto& e : kEntities) {
      if (e.name == ref) {
        pos_ = semi + 1;
        return utf8::encode(e.cp);
      }
    }
    pos_ = semi + 1;
    return "&" + std::string(ref) + ";";
  }

  std::string parse_attribute_value() {
    if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
    const char quote = doc_[pos_++];
    std::string value;
    while (true) {
      if (at_end()) fail("unterminated attribute value");
      char c = peek();
      if (c == quote) {
        ++pos_;
        return value;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        value += parse_reference();
      } else {
        value.push_back(c);
        ++pos_;
      }
    }
  }

  XmlElement parse_element() {
    ++pos_;  // '<'
    XmlElement el;
    el.name = parse_name();
    while (true) {
      skip_ws();
      if (at_end()) fail("unterminated start tag <" + el.name + ">");
      if (starts_with("/>")) {
        pos_ += 2;
        return el;
      }
      if (peek() == '>') {
        ++pos_;
        break;
      }
      std::string attr = parse_name();
      skip_ws();
      if (at_end() || peek() != '=') fail("expected '=' after attribute " + attr);
      ++pos_;
      skip_ws();
      el.attributes.emplace_back(std::move(attr), parse_attribute_value());
    }
    parse_content(el);
    return el;
  }

  void parse_content(XmlElement& el) {
    while (true) {
      if (at_end()) fail("unexpected end of input inside <" + el.name + ">");
      if (starts_with("</")) {
        const auto tag_pos = pos_;
        pos_ += 2;
        std::string name = parse_name();
        skip_ws();
        if (at_end() || peek() != '>') fail("malformed end tag");
        ++pos_;
        if (name != el.name) {
          pos_ = tag_pos;
          fail("mismatched end tag </" + name + "> for <" + el.name + ">");
        }
        return;
      }
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<![CDATA[")) {
        pos_ += 9;
        auto end = doc_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        el.text += doc_.substr(pos_, end - pos_);
        pos_ = end + 3;
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (peek() == '<') {
        el.children.push_back(parse_element());
      } else if (peek() == '&') {
        el.text += parse_reference();
      } else {
        el.text.push_back(peek());
        ++pos_;
      }
    }
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view XmlElement::local_name() const {
  std::string_view n = name;
  auto colon = n.find(':');
  return colon == std::string_view::npos ? n : n.substr(colon + 1);
}

const XmlElement* XmlElement::child(std::string_view local) const {
  for (const auto& c : children) {
    if (c.local_name() == local) return &c;
  }
  return nullptr;
}

std::vector<const XmlElement*> XmlElement::children_named(std::string_view local) const {
  std::vector<const XmlElement*> out;
  for (const auto& c : children) {
    if (c.local_name() == local) out.push_back(&c);
  }
  return out;
}

const std::string* XmlElement::attribute(std::string_view attr) const {
  for (const auto& [k, v] : attributes) {
    if (k == attr) return &v;
  }
  return nullptr;
}

std::string XmlElement::text_content() const {
  std::string out = text;
  for (const auto& c : children) out += c.text_content();
  return out;
}

XmlElement parse_xml(std::string_view document) { return Parser(document).parse_document(); }

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    auto semi = text.find(';', i);
    if (semi == std::string_view::npos || semi - i > 32) {
      out.push_back(text[i++]);
      continue;
    }
    auto ref = text.substr(i + 1, semi - i - 1);
    bool done = false;
    if (!ref.empty() && ref[0] == '#') {
      std::string digits(ref.substr(1));
      char* endp = nullptr;
      unsigned long cp = 0;
      if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
        cp = std::strtoul(digits.c_str() + 1, &endp, 16);
      } else {
        cp = std::strtoul(digits.c_str(), &endp, 10);
      }
      if (!digits.empty() && endp && *endp == '\0' && cp > 0 && cp <= 0x10FFFF) {
        out += utf8::encode(static_cast<char32_t>(cp));
        done = true;
      }
    } else {
      for (const auto& e : kEntities) {
        if (e.name == ref) {
          out += utf8::encode(e.cp);
          done = true;
          break;
        }
      }
    }
    if (done) {
      i = semi + 1;
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

}  // namespace newsdesk::ingest
