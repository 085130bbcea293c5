#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "newsdesk/common/errors.hpp"

namespace newsdesk {

enum class Language { en, ar };

enum class SectionLabel { entertainment, sports, business, technology, politics, health };

enum class PropagandaLabel { very_unlikely, unlikely, somehow, likely, very_likely };

enum class StanceLabel { agree, disagree, discuss, unrelated };

// Media Frames Corpus dimensions.
enum class FrameLabel {
  economic,
  capacity_and_resources,
  morality,
  fairness_and_equality,
  legality,
  policy_prescription,
  crime_and_punishment,
  security_and_defense,
  health_and_safety,
  quality_of_life,
  cultural_identity,
  public_opinion,
  political,
  external_regulation,
  other,
};

enum class Factuality { low, mixed, high };

// Seven-point left/right scale.
enum class BiasLabel { extreme_left, left, center_left, center, center_right, right, extreme_right };

enum class ValenceLabel { far_left, left, center, right, far_right };

template <typename E>
struct EnumNames;

template <>
struct EnumNames<Language> {
  static constexpr std::array<std::string_view, 2> names = {"en", "ar"};
};
template <>
struct EnumNames<SectionLabel> {
  static constexpr std::array<std::string_view, 6> names = {
      "entertainment", "sports", "business", "technology", "politics", "health"};
};
template <>
struct EnumNames<PropagandaLabel> {
  static constexpr std::array<std::string_view, 5> names = {
      "very_unlikely", "unlikely", "somehow", "likely", "very_likely"};
};
template <>
struct EnumNames<StanceLabel> {
  static constexpr std::array<std::string_view, 4> names = {"agree", "disagree", "discuss",
                                                            "unrelated"};
};
template <>
struct EnumNames<FrameLabel> {
  static constexpr std::array<std::string_view, 15> names = {
      "economic",          "capacity_and_resources", "morality",
      "fairness_and_equality", "legality",           "policy_prescription",
      "crime_and_punishment", "security_and_defense", "health_and_safety",
      "quality_of_life",   "cultural_identity",      "public_opinion",
      "political",         "external_regulation",    "other"};
};
template <>
struct EnumNames<Factuality> {
  static constexpr std::array<std::string_view, 3> names = {"low", "mixed", "high"};
};
template <>
struct EnumNames<BiasLabel> {
  static constexpr std::array<std::string_view, 7> names = {
      "extreme_left", "left", "center_left", "center", "center_right", "right", "extreme_right"};
};
template <>
struct EnumNames<ValenceLabel> {
  static constexpr std::array<std::string_view, 5> names = {"far_left", "left", "center", "right",
                                                            "far_right"};
};

template <typename E>
constexpr std::size_t enum_count() {
  return EnumNames<E>::names.size();
}

template <typename E>
constexpr std::size_t to_index(E e) {
  return static_cast<std::size_t>(e);
}

template <typename E>
constexpr E from_index(std::size_t i) {
  return static_cast<E>(i);
}

template <typename E>
constexpr std::string_view to_string(E e) {
  return EnumNames<E>::names[static_cast<std::size_t>(e)];
}

template <typename E>
std::optional<E> try_parse(std::string_view name) {
  const auto& names = EnumNames<E>::names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<E>(i);
  }
  return std::nullopt;
}

template <typename E>
E parse_enum(std::string_view name) {
  if (auto e = try_parse<E>(name)) return *e;
  throw ConfigError("unknown label '" + std::string(name) + "'");
}

template <typename E>
constexpr auto all_values() {
  std::array<E, enum_count<E>()> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<E>(i);
  return out;
}

struct PropagandaResult {
  double index = 0.0;
  PropagandaLabel label = PropagandaLabel::very_unlikely;

  friend bool operator==(const PropagandaResult&, const PropagandaResult&) = default;
};

}  // namespace newsdesk
