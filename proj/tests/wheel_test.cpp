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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "pea/wheel.hpp"

namespace pea {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Wheel, GroupMembership) {
  EXPECT_EQ(group_of(Emotion24::rage), Emotion8::aggressiveness);
  EXPECT_EQ(group_of(Emotion24::serenity), Emotion8::love);
  EXPECT_EQ(group_of(Emotion24::boredom), Emotion8::contempt);
  EXPECT_EQ(group_of(Emotion24::admiration), Emotion8::submission);
  EXPECT_EQ(group_of(Emotion24::distraction), Emotion8::disapproval);

  std::array<int, kNumEmotion8> per_group{};
  for (auto e : kAllEmotion24) ++per_group[index_of(group_of(e))];
  for (int n : per_group) EXPECT_EQ(n, 3);
}

TEST(Wheel, NamesAndAbbreviationsAreDistinct) {
  std::set<std::string_view> names, abbrevs;
  for (auto e : kAllEmotion24) {
    names.insert(name_of(e));
    abbrevs.insert(abbrev_of(e));
    EXPECT_LE(abbrev_of(e).size(), 5u);
  }
  EXPECT_EQ(names.size(), 24u);
  EXPECT_EQ(abbrevs.size(), 24u);
  EXPECT_EQ(abbrev_of(Emotion24::annoyance), "anyce");
  EXPECT_EQ(abbrev_of(Emotion24::pensiveness), "psvne");
  EXPECT_EQ(abbrev_of(Emotion8::disapproval), "dspvl");
  EXPECT_EQ(abbrev_of(Emotion8::aggressiveness), "agrsv");
}

TEST(Wheel, CanonicalAngles) {
  EXPECT_DOUBLE_EQ(radians_of(Emotion8::disapproval), 7 * kPi / 4);
  EXPECT_DOUBLE_EQ(radians_of(Emotion8::awe), 0.0);
  EXPECT_DOUBLE_EQ(radians_of(Emotion8::love), kPi / 2);
  EXPECT_DOUBLE_EQ(radians_of(Emotion8::remorse), 3 * kPi / 2);
  EXPECT_DOUBLE_EQ(radians_of(Emotion8::submission), kPi / 4);

  // Disapproval is the point (sqrt2/2, -sqrt2/2).
  const double t = radians_of(Emotion8::disapproval);
  EXPECT_NEAR(std::cos(t), std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(std::sin(t), -std::sqrt(2.0) / 2, 1e-15);

  std::set<int> turns;
  for (auto g : kAllEmotion8) {
    turns.insert(eighth_turns_of(g));
    EXPECT_GE(radians_of(g), 0.0);
    EXPECT_LT(radians_of(g), 2 * kPi);
  }
  EXPECT_EQ(turns.size(), 8u);
}

TEST(Wheel, OppositeDyadsArePiApart) {
  const std::pair<Emotion8, Emotion8> opposites[] = {
      {Emotion8::love, Emotion8::remorse},
      {Emotion8::submission, Emotion8::contempt},
      {Emotion8::awe, Emotion8::aggressiveness},
      {Emotion8::disapproval, Emotion8::optimism},
  };
  for (auto [a, b] : opposites) {
    EXPECT_DOUBLE_EQ(std::abs(radians_of(a) - radians_of(b)), kPi);
    EXPECT_EQ(pair_score(a, b), 0.0);
  }
}

TEST(Wheel, AdjacencyFollowsWheelOrder) {
  const Emotion8 order[] = {Emotion8::love,     Emotion8::optimism,    Emotion8::aggressiveness,
                            Emotion8::contempt, Emotion8::remorse,     Emotion8::disapproval,
                            Emotion8::awe,      Emotion8::submission};
  for (std::size_t i = 0; i < 8; ++i)
    EXPECT_EQ(pair_score(order[i], order[(i + 1) % 8]), 0.75);
}

TEST(Wheel, PairScoreExamples) {
  // Emotions at 3pi/2 (remorse) and pi/4 (submission).
  EXPECT_EQ(pair_score(Emotion24::grief, Emotion24::trust), 0.25);
  EXPECT_EQ(pair_score(Emotion24::joy, Emotion24::ecstasy), 1.0);
  EXPECT_EQ(pair_score(Emotion24::ecstasy, Emotion24::grief), 0.0);
  EXPECT_EQ(pair_score(Emotion24::anger, Emotion24::interest), 0.75);
  EXPECT_EQ(pair_score(Emotion24::loathing, Emotion24::admiration), 0.0);
}

TEST(Wheel, PairScoreMatchesPolarOracle) {
  for (auto a : kAllEmotion24)
    for (auto b : kAllEmotion24)
      EXPECT_NEAR(pair_score(a, b),
                  oracle::polar_score(radians_of(group_of(a)), radians_of(group_of(b))), 1e-12)
          << name_of(a) << " " << name_of(b);
}

TEST(Wheel, ScoreLatticeSymmetryAndExtremes) {
  const std::set<double> lattice{0.0, 0.25, 0.5, 0.75, 1.0};
  for (auto a : kAllEmotion24) {
    for (auto b : kAllEmotion24) {
      const double s = pair_score(a, b);
      EXPECT_TRUE(lattice.contains(s));
      EXPECT_EQ(s, pair_score(b, a));
      EXPECT_EQ(s == 1.0, group_of(a) == group_of(b));
      const int diff = std::abs(eighth_turns_of(group_of(a)) - eighth_turns_of(group_of(b)));
      EXPECT_EQ(s == 0.0, diff == 4);
    }
  }
}

TEST(Wheel, RawAndWrappedDifferencesAgree) {
  for (int d = 0; d < 8; ++d) {
    EXPECT_EQ(score_from_raw_difference(d), score_from_separation(d));
    EXPECT_EQ(score_from_raw_difference(d), score_from_raw_difference((8 - d) % 8));
  }
}

TEST(Wheel, InvariantUnderReflectionAndRotation) {
  AngleMap mirrored{}, rotated{};
  for (std::size_t i = 0; i < kNumEmotion8; ++i) {
    mirrored[i] = (8 - kCanonicalAngles[i]) % 8;
    rotated[i] = (kCanonicalAngles[i] + 3) % 8;
  }
  for (auto a : kAllEmotion24) {
    for (auto b : kAllEmotion24) {
      EXPECT_EQ(pair_score(a, b), pair_score(a, b, mirrored));
      EXPECT_EQ(pair_score(a, b), pair_score(a, b, rotated));
    }
  }
}

TEST(Wheel, ParseAcceptsNamesAndAbbreviations) {
  EXPECT_EQ(std::get<Emotion24>(parse_emotion("anyce")), Emotion24::annoyance);
  EXPECT_EQ(std::get<Emotion8>(parse_emotion("Optimism")), Emotion8::optimism);
  EXPECT_EQ(std::get<Emotion24>(parse_emotion("JOY")), Emotion24::joy);
  EXPECT_EQ(std::get<Emotion8>(parse_emotion("cntmp")), Emotion8::contempt);
  for (auto e : kAllEmotion24) {
    EXPECT_EQ(parse_emotion24(name_of(e)), e);
    EXPECT_EQ(parse_emotion24(abbrev_of(e)), e);
  }
  for (auto g : kAllEmotion8) {
    EXPECT_EQ(parse_emotion8(name_of(g)), g);
    EXPECT_EQ(parse_emotion8(abbrev_of(g)), g);
  }
}

TEST(Wheel, ParseRejectsUnknownLabels) {
  try {
    parse_emotion("happyness");
    FAIL() << "expected UnknownLabelError";
  } catch (const UnknownLabelError& e) {
    EXPECT_EQ(e.label(), "happyness");
    EXPECT_NE(std::string(e.what()).find("happyness"), std::string::npos);
  }
  EXPECT_THROW(parse_emotion24("love"), UnknownLabelError);
  EXPECT_THROW(parse_emotion(""), UnknownLabelError);
}

}  // namespace
}  // namespace pea
