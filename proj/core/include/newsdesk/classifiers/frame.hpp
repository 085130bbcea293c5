#pragma once

#include <string>
#include <string_view>
#include <unordered_map>

#include "newsdesk/model/article.hpp"

namespace newsdesk::classifiers {

class FramePlugin {
 public:
  virtual ~FramePlugin() = default;
  virtual std::string name() const = 0;
  /// Distribution over every FrameLabel, summing to 1.
  virtual FrameDistribution classify(std::string_view article_body) const = 0;
};

/// Normalized keyword-lexicon hit counts per frame; uniform over all frames
/// when nothing matches.
class KeywordFrameBaseline final : public FramePlugin {
 public:
  KeywordFrameBaseline();
  explicit KeywordFrameBaseline(std::unordered_multimap<std::string, FrameLabel> lexicon);

  std::string name() const override { return "keyword-baseline"; }
  FrameDistribution classify(std::string_view article_body) const override;

 private:
  std::unordered_multimap<std::string, FrameLabel> lexicon_;
};

FrameDistribution classify_frame(std::string_view article_body, const FramePlugin& impl);

/// `frame<TAB>keyword` lines; keywords are lemmatized on load.
std::unordered_multimap<std::string, FrameLabel> parse_frame_lexicon(std::string_view content);

}  // namespace newsdesk::classifiers
