#include "newsdesk/textproc/style.hpp"

#include <unordered_map>

#include "newsdesk/common/utf8.hpp"
#include "newsdesk/textproc/tokenize.hpp"

namespace newsdesk::textproc {

namespace {

bool is_vowel_cp(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
    case 0xE0: case 0xE1: case 0xE2: case 0xE4: case 0xE8: case 0xE9: case 0xEA:
    case 0xEB: case 0xEC: case 0xED: case 0xEE: case 0xEF: case 0xF2: case 0xF3:
    case 0xF4: case 0xF6: case 0xF9: case 0xFA: case 0xFB: case 0xFC:
    // Arabic long vowels
    case 0x627: case 0x648: case 0x64A: case 0x649:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::size_t count_syllables(std::string_view word) {
  const auto cps = utf8::decode(word);
  std::size_t groups = 0;
  bool in_group = false;
  for (char32_t c : cps) {
    const bool v = is_vowel_cp(utf8::fold(c));
    if (v && !in_group) ++groups;
    in_group = v;
  }
  if (groups > 1 && cps.size() > 2 && utf8::fold(cps.back()) == U'e' &&
      !is_vowel_cp(utf8::fold(cps[cps.size() - 2]))) {
    --groups;
  }
  return groups == 0 ? 1 : groups;
}

std::array<double, StyleFeatures::kScalarCount> StyleFeatures::scaled_scalars() const {
  return {type_token_ratio,           hapax_ratio,          avg_sentence_length / 50.0,
          avg_word_length / 10.0,     flesch_reading_ease / 100.0, long_word_ratio};
}

StyleFeatures style_features(std::string_view text) {
  StyleFeatures f;

  // Character n-grams over the case-folded, whitespace-collapsed text.
  const auto folded = utf8::decode(utf8::collapse_whitespace(utf8::casefold(text)));
  for (std::size_t n = 2; n <= 3; ++n) {
    if (folded.size() < n) continue;
    for (std::size_t i = 0; i + n <= folded.size(); ++i) {
      ++f.char_ngram_counts[utf8::encode(std::u32string_view(folded).substr(i, n))];
    }
  }

  const Tokens toks = words(text);
  if (toks.empty()) return f;

  std::unordered_map<std::string_view, std::size_t> freq;
  std::size_t chars = 0;
  std::size_t syllables = 0;
  std::size_t long_words = 0;
  for (const auto& t : toks) {
    ++freq[t];
    const auto len = utf8::length(t);
    chars += len;
    syllables += count_syllables(t);
    if (len >= 7) ++long_words;
  }
  std::size_t hapax = 0;
  for (const auto& [w, c] : freq) {
    if (c == 1) ++hapax;
  }
  const double n_words = static_cast<double>(toks.size());
  const auto sents = sentences(text);
  const double n_sents = static_cast<double>(sents.empty() ? 1 : sents.size());

  f.type_token_ratio = static_cast<double>(freq.size()) / n_words;
  f.hapax_ratio = static_cast<double>(hapax) / n_words;
  f.avg_sentence_length = n_words / n_sents;
  f.avg_word_length = static_cast<double>(chars) / n_words;
  f.flesch_reading_ease = 206.835 - 1.015 * (n_words / n_sents) -
                          84.6 * (static_cast<double>(syllables) / n_words);
  f.long_word_ratio = static_cast<double>(long_words) / n_words;
  return f;
}

}  // namespace newsdesk::textproc
