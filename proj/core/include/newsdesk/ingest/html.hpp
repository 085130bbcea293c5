#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newsdesk::ingest {

struct HtmlToken {
  enum class Kind { start_tag, end_tag, text };

  Kind kind = Kind::text;
  std::string name;  // lower-cased tag name; empty for text
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;  // entity-decoded character data
  bool self_closing = false;

  const std::string* attribute(std::string_view key) const;
};

/// Lenient tokenizer: never throws. Comments, DOCTYPE and the contents of
/// <script>, <style>, <noscript> and <template> are dropped.
std::vector<HtmlToken> tokenize_html(std::string_view html);

bool is_void_element(std::string_view name);

}  // namespace newsdesk::ingest
