#pragma once

#include <string>
#include <string_view>

#include "newsdesk/model/labels.hpp"

namespace newsdesk::ingest {

struct Translation {
  std::string text;
  Language language = Language::en;  // language of `text`
  bool translated = false;
};

class Translator {
 public:
  virtual ~Translator() = default;
  virtual Translation translate(std::string_view text, Language from, Language to) const = 0;
};

/// Returns the input unchanged, tagged with its original language.
class IdentityTranslator final : public Translator {
 public:
  Translation translate(std::string_view text, Language from, Language) const override {
    return {std::string(text), from, false};
  }
};

}  // namespace newsdesk::ingest
