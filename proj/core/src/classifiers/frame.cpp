#include "newsdesk/classifiers/frame.hpp"

#include "newsdesk/textproc/lexicon.hpp"
#include "newsdesk/textproc/tokenize.hpp"

namespace newsdesk::classifiers {

std::unordered_multimap<std::string, FrameLabel> parse_frame_lexicon(std::string_view content) {
  std::unordered_multimap<std::string, FrameLabel> out;
  for (const auto& line : textproc::parse_word_list(content)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    const auto frame = parse_enum<FrameLabel>(line.substr(0, tab));
    const auto keyword = textproc::lemmatize_en(line.substr(tab + 1));
    out.emplace(keyword, frame);
  }
  return out;
}

KeywordFrameBaseline::KeywordFrameBaseline()
    : lexicon_(parse_frame_lexicon(textproc::builtin_frame_lexicon())) {}

KeywordFrameBaseline::KeywordFrameBaseline(std::unordered_multimap<std::string, FrameLabel> lexicon)
    : lexicon_(std::move(lexicon)) {}

FrameDistribution KeywordFrameBaseline::classify(std::string_view body) const {
  std::array<std::size_t, enum_count<FrameLabel>()> hits{};
  std::size_t total = 0;
  for (const auto& token : textproc::preprocess(body, Language::en)) {
    auto [lo, hi] = lexicon_.equal_range(token);
    for (auto it = lo; it != hi; ++it) {
      ++hits[to_index(it->second)];
      ++total;
    }
  }
  FrameDistribution out;
  const double n = static_cast<double>(hits.size());
  for (auto f : all_values<FrameLabel>()) {
    out[f] = total == 0 ? 1.0 / n
                        : static_cast<double>(hits[to_index(f)]) / static_cast<double>(total);
  }
  return out;
}

FrameDistribution classify_frame(std::string_view body, const FramePlugin& impl) {
  return impl.classify(body);
}

}  // namespace newsdesk::classifiers
