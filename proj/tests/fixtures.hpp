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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pea/tasks.hpp"

namespace pea::fixtures {

// Multi-label corpus with 1-3 fine-grained labels per item, skewed so that
// some groups are rare (every group still has far fewer positives than
// candidates).
inline std::vector<LabeledItem> synthetic_corpus(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<LabeledItem> items;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledItem it;
    it.id = "item" + std::to_string(i);
    it.text = "text of item " + std::to_string(i);
    const auto labels = 1 + gen() % 3;
    for (std::size_t k = 0; k < labels; ++k) {
      // A power of a uniform draw biases toward low indices.
      const double u = static_cast<double>(gen() % 10000) / 10000.0;
      it.labels.insert(emotion24_at(static_cast<std::size_t>(std::pow(u, 1.25) * 24)));
    }
    items.push_back(std::move(it));
  }
  return items;
}

}  // namespace pea::fixtures
