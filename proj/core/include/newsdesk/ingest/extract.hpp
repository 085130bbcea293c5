#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "newsdesk/common/time.hpp"

namespace newsdesk::ingest {

struct ExtractedContent {
  std::string title;
  std::string body;
  std::optional<Timestamp> published_at;
};

/// Turns a fetched HTML page into title and body text.
class ContentExtractor {
 public:
  virtual ~ContentExtractor() = default;

  /// Throws ExtractError when no article text can be found.
  virtual ExtractedContent extract(std::string_view html) const = 0;
};

/// Baseline extractor: the body is the largest block of <p> elements sharing
/// one parent element, measured in code points. The title comes from
/// og:title, then <title>, then the first <h1>.
class ParagraphBlockExtractor final : public ContentExtractor {
 public:
  ExtractedContent extract(std::string_view html) const override;
};

}  // namespace newsdesk::ingest
