#include "newsdesk/textproc/tokenize.hpp"

#include <array>

#include "newsdesk/common/utf8.hpp"

namespace newsdesk::textproc {

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string undouble(std::string stem) {
  const auto n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1]) && stem[n - 1] != 'l' &&
      stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
  }
  return stem;
}

bool is_ascii(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

bool has_arabic(std::u32string_view cps) {
  for (char32_t cp : cps) {
    if (cp >= 0x600 && cp <= 0x6FF) return true;
  }
  return false;
}

// Stripped longest first.
constexpr std::array<std::u32string_view, 7> kArabicPrefixes = {
    U"وال", U"بال", U"كال", U"فال",
    U"لل",       U"ال",       U"و"};
constexpr std::array<std::u32string_view, 10> kArabicSuffixes = {
    U"ها", U"ان", U"ات", U"ون", U"ين",
    U"يه", U"ية", U"ه",       U"ة",       U"ي"};

}  // namespace

Tokens words(std::string_view text) {
  Tokens out;
  std::u32string current;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_word_char(cp)) {
      current.push_back(utf8::fold(cp));
    } else if (utf8::is_arabic_diacritic(cp) && !current.empty()) {
      current.push_back(cp);
    } else if (!current.empty()) {
      out.push_back(utf8::encode(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(utf8::encode(current));
  return out;
}

std::vector<std::string> sentences(std::string_view text) {
  std::vector<std::string> out;
  std::u32string current;
  auto flush = [&] {
    auto s = utf8::collapse_whitespace(utf8::encode(current));
    if (!words(s).empty()) out.push_back(std::move(s));
    current.clear();
  };
  for (char32_t cp : utf8::decode(text)) {
    if (cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x61F || cp == 0x6D4 || cp == U'\n') {
      current.push_back(cp);
      flush();
    } else {
      current.push_back(cp);
    }
  }
  flush();
  return out;
}

std::string lemmatize_en(std::string_view word, const Lexicons& lex) {
  std::string w(word);
  if (auto it = lex.lemmas_en.find(w); it != lex.lemmas_en.end()) return it->second;
  if (!is_ascii(w) || w.size() <= 3) return w;
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  if (ends_with(w, "ing") && w.size() >= 6) return undouble(w.substr(0, w.size() - 3));
  if (ends_with(w, "ed") && w.size() >= 5) return undouble(w.substr(0, w.size() - 2));
  return w;
}

std::string normalize_ar(std::string_view word) {
  std::u32string out;
  for (char32_t cp : utf8::decode(word)) {
    if (utf8::is_arabic_diacritic(cp)) continue;
    if (cp == 0x623 || cp == 0x625 || cp == 0x622) cp = 0x627;  // hamza/madda alef -> alef
    if (cp == 0x649) cp = 0x64A;                               // alef maqsura -> ya
    out.push_back(cp);
  }
  return utf8::encode(out);
}

std::string stem_ar(std::string_view word) {
  std::u32string w = utf8::decode(word);
  for (auto prefix : kArabicPrefixes) {
    if (w.size() >= prefix.size() + 2 && w.compare(0, prefix.size(), prefix) == 0) {
      w.erase(0, prefix.size());
      break;
    }
  }
  for (auto suffix : kArabicSuffixes) {
    if (w.size() >= suffix.size() + 2 &&
        w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0) {
      w.erase(w.size() - suffix.size());
      break;
    }
  }
  return utf8::encode(w);
}

Tokens preprocess(std::string_view text, Language language, const Lexicons& lex) {
  Tokens out;
  for (auto& token : words(text)) {
    const auto cps = utf8::decode(token);
    if (language == Language::ar || has_arabic(cps)) {
      auto norm = normalize_ar(token);
      if (norm.empty() || lex.stopwords_ar.count(norm)) continue;
      if (!has_arabic(utf8::decode(norm))) {
        if (lex.stopwords_en.count(norm)) continue;
        out.push_back(lemmatize_en(norm, lex));
        continue;
      }
      out.push_back(stem_ar(norm));
    } else {
      if (lex.stopwords_en.count(token)) continue;
      auto lemma = lemmatize_en(token, lex);
      if (lex.stopwords_en.count(lemma)) continue;
      out.push_back(std::move(lemma));
    }
  }
  return out;
}

}  // namespace newsdesk::textproc
