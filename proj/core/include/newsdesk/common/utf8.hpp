#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace newsdesk::utf8 {

/// Decodes UTF-8 into code points. Invalid sequences decode to U+FFFD, one
/// per offending byte, so the function is total over arbitrary bytes.
std::u32string decode(std::string_view text);

std::string encode(char32_t cp);
std::string encode(std::u32string_view cps);

/// Simple case folding: ASCII, Latin-1 supplement, Latin Extended-A, Greek and
/// Cyrillic upper-case letters map to lower case. Scripts without case
/// (Arabic) pass through unchanged.
char32_t fold(char32_t cp) noexcept;
std::string casefold(std::string_view text);

/// Letters or digits in the scripts the system handles (Latin, Greek,
/// Cyrillic, Arabic), plus any other code point above U+00FF that is not in
/// a punctuation or symbol block.
bool is_word_char(char32_t cp) noexcept;

bool is_space(char32_t cp) noexcept;

/// Arabic short vowels and tatweel, stripped before stemming.
bool is_arabic_diacritic(char32_t cp) noexcept;

/// Number of code points.
std::size_t length(std::string_view text);

/// Collapses runs of white space into one ASCII space and trims both ends.
std::string collapse_whitespace(std::string_view text);

}  // namespace newsdesk::utf8
