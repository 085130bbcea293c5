#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newsdesk::ingest {

/// Element tree produced by parse_xml. Direct text (character data and CDATA)
/// is concatenated into `text`; mixed-content ordering is not preserved,
/// which feeds never need.
struct XmlElement {
  std::string name;  // qualified, e.g. "dc:date"
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  std::string text;

  /// Name without namespace prefix.
  std::string_view local_name() const;

  /// First child whose local name matches, or nullptr.
  const XmlElement* child(std::string_view local) const;
  std::vector<const XmlElement*> children_named(std::string_view local) const;
  const std::string* attribute(std::string_view name) const;

  /// Own text plus all descendant text, in document order for elements.
  std::string text_content() const;
};

/// Well-formedness-checking parser for the subset of XML that feeds use:
/// prolog, comments, processing instructions, DOCTYPE (skipped), CDATA,
/// predefined and numeric character references. Unknown named entities are
/// kept verbatim. Throws ParseError with the byte offset of the problem.
XmlElement parse_xml(std::string_view document);

/// Decodes predefined, numeric and common HTML named references.
std::string decode_entities(std::string_view text);

}  // namespace newsdesk::ingest
