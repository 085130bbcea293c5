#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

namespace newsdesk::textproc {

/// Vocabulary-richness and readability measures plus raw character n-gram
/// counts, the inputs of the propaganda model.
struct StyleFeatures {
  std::map<std::string, std::size_t> char_ngram_counts;  // n in {2, 3}
  double type_token_ratio = 0.0;   // distinct words / words
  double hapax_ratio = 0.0;        // words seen once / words
  double avg_sentence_length = 0.0;  // words per sentence
  double avg_word_length = 0.0;    // code points per word
  double flesch_reading_ease = 0.0;
  double long_word_ratio = 0.0;    // words of 7+ code points / words

  static constexpr std::size_t kScalarCount = 6;

  /// Scalar measures in declaration order, roughly scaled to unit range:
  /// sentence length / 50, word length / 10, Flesch / 100.
  std::array<double, kScalarCount> scaled_scalars() const;
};

/// Flesch reading ease with vowel-group syllable counting:
/// 206.835 - 1.015 * words/sentences - 84.6 * syllables/words.
/// Empty text yields all zeros.
StyleFeatures style_features(std::string_view text);

/// Vowel groups in an ASCII-folded word, a trailing silent 'e' discounted,
/// at least one per word.
std::size_t count_syllables(std::string_view word);

}  // namespace newsdesk::textproc
