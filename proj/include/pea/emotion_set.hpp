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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pea/wheel.hpp"

namespace pea {

// A set of fine-grained emotions packed into a 24-bit mask. Iteration is in
// table order, so serialized output is deterministic.
class EmotionSet {
 public:
  constexpr EmotionSet() = default;
  constexpr EmotionSet(std::initializer_list<Emotion24> items) {
    for (auto e : items) insert(e);
  }

  static constexpr EmotionSet from_mask(std::uint32_t mask) {
    EmotionSet s;
    s.mask_ = mask & kFullMask;
    return s;
  }

  constexpr void insert(Emotion24 e) { mask_ |= bit(e); }
  constexpr void erase(Emotion24 e) { mask_ &= ~bit(e); }
  constexpr bool contains(Emotion24 e) const { return (mask_ & bit(e)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr std::uint32_t mask() const { return mask_; }

  constexpr EmotionSet operator|(EmotionSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr EmotionSet operator&(EmotionSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr bool operator==(const EmotionSet&) const = default;

  std::vector<Emotion24> members() const {
    std::vector<Emotion24> out;
    out.reserve(size());
    for (auto e : kAllEmotion24)
      if (contains(e)) out.push_back(e);
    return out;
  }

  // Distinct groups touched by the set, as an 8-bit mask.
  constexpr std::uint8_t group_mask() const {
    std::uint8_t g = 0;
    for (std::size_t i = 0; i < kNumEmotion24; ++i)
      if (mask_ & (1u << i)) g |= static_cast<std::uint8_t>(1u << (i / 3));
    return g;
  }

  constexpr bool has_group(Emotion8 g) const {
    return (group_mask() & (1u << index_of(g))) != 0;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (auto e : members()) out.emplace_back(name_of(e));
    return out;
  }

 private:
  static constexpr std::uint32_t kFullMask = (1u << kNumEmotion24) - 1;
  static constexpr std::uint32_t bit(Emotion24 e) { return 1u << index_of(e); }

  std::uint32_t mask_ = 0;
};

// Parses a list of labels; group names are rejected here because
// annotations are always fine-grained.
template <typename Range>
EmotionSet parse_emotion_set(const Range& labels) {
  EmotionSet s;
  for (const auto& label : labels) s.insert(parse_emotion24(label));
  return s;
}

}  // namespace pea
