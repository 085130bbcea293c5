#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace newsdesk::textproc {

/// Reads a one-entry-per-line UTF-8 word list. Blank lines and lines starting
/// with '#' are skipped; surrounding white space is trimmed.
std::vector<std::string> parse_word_list(std::string_view content);
std::vector<std::string> load_word_list(const std::filesystem::path& path);

/// Tab-separated `inflection\tlemma` pairs, same comment rules.
std::unordered_map<std::string, std::string> parse_lemma_table(std::string_view content);

struct Lexicons {
  std::unordered_set<std::string> stopwords_en;
  std::unordered_set<std::string> stopwords_ar;  // stored in normalized form
  std::unordered_map<std::string, std::string> lemmas_en;

  /// Loads stopwords_en.txt, stopwords_ar.txt and lemmas_en.tsv from `dir`.
  static Lexicons load(const std::filesystem::path& dir);

  /// The tables shipped in core/data, compiled into the library.
  static const Lexicons& builtin();
};

// Raw contents of the shipped data files.
std::string_view builtin_stopwords_en();
std::string_view builtin_stopwords_ar();
std::string_view builtin_lemmas_en();
std::string_view builtin_polarity_lexicon();
std::string_view builtin_frame_lexicon();

}  // namespace newsdesk::textproc
