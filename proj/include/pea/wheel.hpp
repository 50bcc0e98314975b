// Copyright 2026 The PEA Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Plutchik wheel geometry: the 24 fine-grained emotions, the 8 groups that
// own them, and the angular agreement score between two emotions.
//
// Group angles are kept as integer eighth-turns (multiples of pi/4) so that
// every pair score is an exact binary fraction in {0, .25, .5, .75, 1}.

#include <array>
#include <cctype>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pea/error.hpp"

namespace pea {

// Listed in table order: three intensities per group, groups in the order
// of Emotion8 below.
enum class Emotion24 : std::uint8_t {
  rage, anger, annoyance,
  vigilance, anticipation, interest,
  ecstasy, joy, serenity,
  admiration, trust, acceptance,
  terror, fear, apprehension,
  amazement, surprise, distraction,
  grief, sadness, pensiveness,
  loathing, disgust, boredom,
};

enum class Emotion8 : std::uint8_t {
  aggressiveness, optimism, love, submission,
  awe, disapproval, remorse, contempt,
};

inline constexpr std::size_t kNumEmotion24 = 24;
inline constexpr std::size_t kNumEmotion8 = 8;

namespace detail {

struct Emotion24Info {
  std::string_view name;
  std::string_view abbrev;
};

struct Emotion8Info {
  std::string_view name;
  std::string_view abbrev;
  int eighth_turns;  // angle = eighth_turns * pi / 4
};

inline constexpr std::array<Emotion24Info, kNumEmotion24> kEmotion24Table{{
    {"rage", "rage"},           {"anger", "anger"},
    {"annoyance", "anyce"},     {"vigilance", "vglnc"},
    {"anticipation", "antcp"},  {"interest", "inrst"},
    {"ecstasy", "ecsty"},       {"joy", "joy"},
    {"serenity", "srnty"},      {"admiration", "admrn"},
    {"trust", "trust"},         {"acceptance", "acptn"},
    {"terror", "trror"},        {"fear", "fear"},
    {"apprehension", "aprhn"},  {"amazement", "amzmt"},
    {"surprise", "srpse"},      {"distraction", "dstrn"},
    {"grief", "grief"},         {"sadness", "sadns"},
    {"pensiveness", "psvne"},   {"loathing", "lthng"},
    {"disgust", "dsgst"},       {"boredom", "brdom"},
}};

// Counterclockwise from awe: awe, submission, love, optimism,
// aggressiveness, contempt, remorse, disapproval. Disapproval sits at
// 7pi/4, i.e. (sqrt2/2, -sqrt2/2).
inline constexpr std::array<Emotion8Info, kNumEmotion8> kEmotion8Table{{
    {"aggressiveness", "agrsv", 4},
    {"optimism", "optsm", 3},
    {"love", "love", 2},
    {"submission", "sbmsn", 1},
    {"awe", "awe", 0},
    {"disapproval", "dspvl", 7},
    {"remorse", "rmrse", 6},
    {"contempt", "cntmp", 5},
}};

inline bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

}  // namespace detail

constexpr std::size_t index_of(Emotion24 e) { return static_cast<std::size_t>(e); }
constexpr std::size_t index_of(Emotion8 g) { return static_cast<std::size_t>(g); }

constexpr Emotion24 emotion24_at(std::size_t i) { return static_cast<Emotion24>(i); }
constexpr Emotion8 emotion8_at(std::size_t i) { return static_cast<Emotion8>(i); }

// All values in table order, for range-for loops.
inline constexpr std::array<Emotion24, kNumEmotion24> kAllEmotion24 = [] {
  std::array<Emotion24, kNumEmotion24> out{};
  for (std::size_t i = 0; i < kNumEmotion24; ++i) out[i] = emotion24_at(i);
  return out;
}();

inline constexpr std::array<Emotion8, kNumEmotion8> kAllEmotion8 = [] {
  std::array<Emotion8, kNumEmotion8> out{};
  for (std::size_t i = 0; i < kNumEmotion8; ++i) out[i] = emotion8_at(i);
  return out;
}();

constexpr std::string_view name_of(Emotion24 e) {
  return detail::kEmotion24Table[index_of(e)].name;
}
constexpr std::string_view abbrev_of(Emotion24 e) {
  return detail::kEmotion24Table[index_of(e)].abbrev;
}
constexpr std::string_view name_of(Emotion8 g) {
  return detail::kEmotion8Table[index_of(g)].name;
}
constexpr std::string_view abbrev_of(Emotion8 g) {
  return detail::kEmotion8Table[index_of(g)].abbrev;
}

constexpr Emotion8 group_of(Emotion24 e) {
  return emotion8_at(index_of(e) / 3);
}

// The middle-intensity member of a group (anger for aggressiveness, ...).
constexpr Emotion24 representative_of(Emotion8 g) {
  return emotion24_at(index_of(g) * 3 + 1);
}

// Angle of a group as a whole number of eighth-turns in [0, 8).
constexpr int eighth_turns_of(Emotion8 g) {
  return detail::kEmotion8Table[index_of(g)].eighth_turns;
}

constexpr double radians_of(Emotion8 g) {
  return eighth_turns_of(g) * (std::numbers::pi / 4.0);
}

// A map from groups to eighth-turn angles. Scores only depend on angular
// differences, so any rotation or reflection of the canonical map yields
// the same scores.
using AngleMap = std::array<int, kNumEmotion8>;

inline constexpr AngleMap kCanonicalAngles = [] {
  AngleMap m{};
  for (std::size_t i = 0; i < kNumEmotion8; ++i)
    m[i] = detail::kEmotion8Table[i].eighth_turns;
  return m;
}();

// Score from a raw angular difference in eighth-turns, |1 - d/pi|, with d
// taken as given (not wrapped). Valid for any integer difference in [0, 8).
constexpr double score_from_raw_difference(int eighths) {
  const double normalized = static_cast<double>(eighths) / 4.0;
  const double s = 1.0 - normalized;
  return s < 0 ? -s : s;
}

// Score from the minimal angular separation in eighth-turns, 1 - sep/4.
constexpr double score_from_separation(int eighths) {
  int d = eighths % 8;
  if (d < 0) d += 8;
  const int sep = d <= 4 ? d : 8 - d;
  return 1.0 - static_cast<double>(sep) / 4.0;
}

constexpr double pair_score(Emotion8 a, Emotion8 b,
                            const AngleMap& angles = kCanonicalAngles) {
  const int diff = angles[index_of(a)] - angles[index_of(b)];
  return score_from_raw_difference(diff < 0 ? -diff : diff);
}

// Agreement between two fine-grained emotions: 1 for the same group, 0 for
// diametrically opposite groups, linear in angular separation between.
constexpr double pair_score(Emotion24 a, Emotion24 b,
                            const AngleMap& angles = kCanonicalAngles) {
  return pair_score(group_of(a), group_of(b), angles);
}

using AnyEmotion = std::variant<Emotion24, Emotion8>;

// Case-insensitive lookup by full name or abbreviation. Fine-grained names
// take precedence ("love" is only a group, so there is no clash in practice).
inline std::optional<Emotion24> try_parse_emotion24(std::string_view label) {
  for (auto e : kAllEmotion24) {
    if (detail::iequals(label, name_of(e)) || detail::iequals(label, abbrev_of(e)))
      return e;
  }
  return std::nullopt;
}

inline std::optional<Emotion8> try_parse_emotion8(std::string_view label) {
  for (auto g : kAllEmotion8) {
    if (detail::iequals(label, name_of(g)) || detail::iequals(label, abbrev_of(g)))
      return g;
  }
  return std::nullopt;
}

inline AnyEmotion parse_emotion(std::string_view label) {
  if (auto e = try_parse_emotion24(label)) return *e;
  if (auto g = try_parse_emotion8(label)) return *g;
  throw UnknownLabelError(std::string(label));
}

inline Emotion24 parse_emotion24(std::string_view label) {
  if (auto e = try_parse_emotion24(label)) return *e;
  throw UnknownLabelError(std::string(label));
}

inline Emotion8 parse_emotion8(std::string_view label) {
  if (auto g = try_parse_emotion8(label)) return *g;
  throw UnknownLabelError(std::string(label));
}

}  // namespace pea
