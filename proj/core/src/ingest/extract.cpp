#include "newsdesk/ingest/extract.hpp"

#include <map>
#include <vector>

#include "newsdesk/common/errors.hpp"
#include "newsdesk/common/utf8.hpp"
#include "newsdesk/ingest/html.hpp"

namespace newsdesk::ingest {

namespace {

// Elements that implicitly end an open paragraph.
bool closes_paragraph(std::string_view name) {
  return name == "p" || name == "div" || name == "section" || name == "article" ||
         name == "ul" || name == "ol" || name == "table" || name == "h1" || name == "h2" ||
         name == "h3" || name == "h4" || name == "h5" || name == "h6" || name == "blockquote" ||
         name == "pre" || name == "header" || name == "footer" || name == "nav" ||
         name == "aside" || name == "form" || name == "hr" || name == "figure";
}

struct Block {
  std::vector<std::string> paragraphs;
  std::size_t length = 0;
  std::size_t first_seen = 0;
};

}  // namespace

ExtractedContent ParagraphBlockExtractor::extract(std::string_view html) const {
  const auto tokens = tokenize_html(html);

  ExtractedContent out;
  std::string og_title;
  std::string title_tag;
  std::string h1;

  // Stack of (tag name, element serial).
  std::vector<std::pair<std::string, std::size_t>> stack;
  std::size_t serial = 0;
  std::map<std::size_t, Block> blocks;  // keyed by parent element serial

  bool in_title = false;
  int h1_depth = 0;
  bool in_p = false;
  std::size_t p_parent = 0;
  std::string p_text;

  auto close_paragraph = [&] {
    if (!in_p) return;
    in_p = false;
    auto text = utf8::collapse_whitespace(p_text);
    p_text.clear();
    if (text.empty()) return;
    auto& block = blocks[p_parent];
    if (block.paragraphs.empty()) block.first_seen = serial;
    block.length += utf8::length(text);
    block.paragraphs.push_back(std::move(text));
  };

  for (const auto& tok : tokens) {
    switch (tok.kind) {
      case HtmlToken::Kind::text:
        if (in_title) title_tag += tok.text;
        if (h1_depth > 0 && h1.size() < 512) h1 += tok.text;
        if (in_p) p_text += tok.text;
        break;
      case HtmlToken::Kind::start_tag: {
        if (tok.name == "meta") {
          const auto* prop = tok.attribute("property");
          if (!prop) prop = tok.attribute("name");
          const auto* content = tok.attribute("content");
          if (prop && content) {
            if (*prop == "og:title" && og_title.empty()) og_title = *content;
            if ((*prop == "article:published_time" || *prop == "pubdate") &&
                !out.published_at) {
              out.published_at = parse_any_date(*content);
            }
          }
          break;
        }
        if (tok.name == "time" && !out.published_at) {
          if (const auto* dt = tok.attribute("datetime")) out.published_at = parse_any_date(*dt);
        }
        if (tok.name == "br" && in_p) p_text += ' ';
        if (is_void_element(tok.name) || tok.self_closing) break;
        if (closes_paragraph(tok.name)) close_paragraph();
        if (tok.name == "title") in_title = true;
        if (tok.name == "h1" && h1.empty()) h1_depth = 1;
        ++serial;
        if (tok.name == "p") {
          in_p = true;
          p_parent = stack.empty() ? 0 : stack.back().second;
        }
        stack.emplace_back(tok.name, serial);
        break;
      }
      case HtmlToken::Kind::end_tag: {
        if (tok.name == "title") in_title = false;
        if (tok.name == "h1") h1_depth = 0;
        if (tok.name == "p" || closes_paragraph(tok.name)) close_paragraph();
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          if (it->first == tok.name) {
            stack.erase(std::next(it).base(), stack.end());
            break;
          }
        }
        break;
      }
    }
  }
  close_paragraph();

  const Block* best = nullptr;
  for (const auto& [parent, block] : blocks) {
    if (!best || block.length > best->length ||
        (block.length == best->length && block.first_seen < best->first_seen)) {
      best = &block;
    }
  }
  if (!best) throw ExtractError("no paragraph text found");

  for (const auto& p : best->paragraphs) {
    if (!out.body.empty()) out.body += "\n\n";
    out.body += p;
  }
  out.title = utf8::collapse_whitespace(
      !og_title.empty() ? og_title : (!title_tag.empty() ? title_tag : h1));
  return out;
}

}  // namespace newsdesk::ingest
