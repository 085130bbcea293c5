#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "newsdesk/model/labels.hpp"
#include "newsdesk/textproc/lexicon.hpp"

namespace newsdesk::textproc {

using Tokens = std::vector<std::string>;

/// Case-folded word tokens; every non-word code point is a separator.
Tokens words(std::string_view text);

/// Sentences split on . ! ? and the Arabic question mark. Empty segments are
/// dropped.
std::vector<std::string> sentences(std::string_view text);

/// Table lookup, then suffix stripping for words the table does not know.
std::string lemmatize_en(std::string_view word, const Lexicons& lex = Lexicons::builtin());

/// Strips diacritics and tatweel and unifies alef variants.
std::string normalize_ar(std::string_view word);

/// Light stemming: definite article and conjunction prefixes, common
/// pronoun and plural suffixes. Input is expected normalized.
std::string stem_ar(std::string_view word);

/// Case folding, punctuation removal, stopwording and lemmatization (English)
/// or light stemming (Arabic). Pure and deterministic.
Tokens preprocess(std::string_view text, Language language,
                  const Lexicons& lex = Lexicons::builtin());

}  // namespace newsdesk::textproc
