// Copyright 2026 The subsetsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subsetsum/instances.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "subsetsum/solvers.h"

namespace subsetsum {
namespace {

using testing::AllSubsetSums;
using testing::MakeInstance;
using testing::OracleSolvable;

constexpr Family kAllFamilies[] = {
    Family::kRestrictedUniform, Family::kPlanted, Family::kDistinctSums,
    Family::kParityBlocked, Family::kScanAdversarial};

bool WithinRestrictedBounds(const Instance& inst) {
  const int n = inst.n();
  for (WideInt w : inst.a()) {
    if (Abs(w) >= Pow2(n)) return false;
  }
  return Abs(inst.b()) < n * Pow2(n);
}

TEST(GenerateTest, DistinctSumsUsesPowersOfTwo) {
  const Instance inst = Generate({3, Family::kDistinctSums, 0, {}});
  EXPECT_EQ(std::vector<WideInt>(inst.a().begin(), inst.a().end()),
            (std::vector<WideInt>{1, 2, 4}));
  std::vector<WideInt> sums = AllSubsetSums(inst.a());
  std::sort(sums.begin(), sums.end());
  EXPECT_EQ(std::unique(sums.begin(), sums.end()) - sums.begin(), 8);
}

TEST(GenerateTest, DistinctSumsHasFullSumSetUpToTwenty) {
  for (int n = 1; n <= 20; ++n) {
    const Instance inst = Generate({n, Family::kDistinctSums, 1, {}});
    const HalfSumTable all = EnumerateHalf(inst.a(), {0, n});
    std::vector<WideInt> sums = all.Sums();
    const auto distinct = std::unique(sums.begin(), sums.end()) - sums.begin();
    EXPECT_EQ(distinct, std::int64_t{1} << n) << "n = " << n;
  }
}

TEST(GenerateTest, DistinctSumsHonorsSolvableHint) {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const GeneratedInstance yes =
          GenerateWithWitness({n, Family::kDistinctSums, seed, true});
      ASSERT_TRUE(yes.witness.has_value());
      EXPECT_TRUE(Verify(yes.instance, *yes.witness));
      const GeneratedInstance no =
          GenerateWithWitness({n, Family::kDistinctSums, seed, false});
      EXPECT_FALSE(no.witness.has_value());
      EXPECT_FALSE(OracleSolvable(no.instance));
      EXPECT_TRUE(WithinRestrictedBounds(no.instance));
    }
  }
}

TEST(GenerateTest, PlantedWitnessVerifies) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GeneratedInstance g =
        GenerateWithWitness({4, Family::kPlanted, seed, {}});
    ASSERT_TRUE(g.witness.has_value());
    EXPECT_TRUE(Verify(g.instance, *g.witness));
  }
}

TEST(GenerateTest, ParityBlockedIsUnsolvable) {
  for (int n = 1; n <= 14; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = Generate({n, Family::kParityBlocked, seed, {}});
      for (WideInt w : inst.a()) EXPECT_EQ(w % 2, 0);
      EXPECT_NE(inst.b() % 2, 0);
      EXPECT_FALSE(BruteForce(inst).verdict.solvable);
    }
  }
  EXPECT_FALSE(
      BruteForce(Generate({5, Family::kParityBlocked, 123, {}})).verdict.solvable);
}

TEST(GenerateTest, ScanAdversarialIsUnsolvableAndWalksBothLists) {
  for (int n = 1; n <= 16; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Instance inst = Generate({n, Family::kScanAdversarial, seed, {}});
      EXPECT_TRUE(WithinRestrictedBounds(inst));
      EXPECT_FALSE(BruteForce(inst).verdict.solvable) << n;
      if (n < 2) continue;
      const PairSolve merged = SolvePairMerged(inst);
      const std::uint64_t model =
          AnalyticCost(PairStrategy::kMerged, n - 1).scan_elements;
      // All but the tail of the longer list is walked.
      EXPECT_GE(2 * merged.report.cost.elements_scanned, model) << n;
    }
  }
}

TEST(GenerateTest, RestrictedBoundsHoldForAllFamilies) {
  int count = 0;
  for (int n = 1; n <= 32; ++n) {
    for (Family family : kAllFamilies) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Instance inst = Generate({n, family, seed * 7919 + n, {}});
        ASSERT_TRUE(WithinRestrictedBounds(inst))
            << FamilyLabel(family) << " n=" << n << " seed=" << seed;
        ++count;
      }
    }
  }
  EXPECT_EQ(count, 32 * 5 * 20);
}

TEST(GenerateTest, SameSpecSameBytes) {
  for (Family family : kAllFamilies) {
    const GenSpec spec{12, family, 42, {}};
    EXPECT_EQ(WriteInstanceText(Generate(spec)),
              WriteInstanceText(Generate(spec)));
  }
  EXPECT_NE(WriteInstanceText(Generate({12, Family::kRestrictedUniform, 1, {}})),
            WriteInstanceText(Generate({12, Family::kRestrictedUniform, 2, {}})));
}

TEST(GenerateTest, DimensionOutsideCapacity) {
  EXPECT_THROW(Generate({0, Family::kPlanted, 0, {}}), CapacityError);
  EXPECT_THROW(Generate({kMaxGenDimension + 1, Family::kPlanted, 0, {}}),
               CapacityError);
  EXPECT_NO_THROW(Generate({kMaxGenDimension, Family::kPlanted, 0, {}}));
}

TEST(GenerateTest, FamilyLabelsRoundTrip) {
  for (Family family : kAllFamilies) {
    EXPECT_EQ(ParseFamily(FamilyLabel(family)), family);
  }
  EXPECT_FALSE(ParseFamily("uniform").has_value());
}

TEST(TextFormatTest, ReadsCanonicalText) {
  EXPECT_EQ(ReadInstanceText("2\n3 4\n7\n"), MakeInstance({3, 4}, 7));
  EXPECT_EQ(ReadInstanceText("3\n-1 0 5\n-12\n"), MakeInstance({-1, 0, 5}, -12));
}

TEST(TextFormatTest, WritesCanonicalText) {
  EXPECT_EQ(WriteInstanceText(MakeInstance({3, 4}, 7)), "2\n3 4\n7\n");
  EXPECT_EQ(WriteInstanceText(MakeInstance({-8, 0}, -1)), "2\n-8 0\n-1\n");
}

TEST(TextFormatTest, RoundTripIsByteExact) {
  for (int i = 0; i < 100; ++i) {
    const GenSpec spec{1 + i % 40, kAllFamilies[i % 5],
                       static_cast<std::uint64_t>(i) * 104729, {}};
    const Instance inst = Generate(spec);
    const std::string text = WriteInstanceText(inst);
    const Instance back = ReadInstanceText(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(WriteInstanceText(back), text);
    std::istringstream stream(text);
    EXPECT_EQ(ReadInstanceText(stream), inst);
  }
}

TEST(TextFormatTest, WideValuesRoundTrip) {
  const WideInt big = Pow2(100) + 12345;
  const Instance inst({big, -big}, 0);
  EXPECT_EQ(ReadInstanceText(WriteInstanceText(inst)), inst);
}

struct Malformed {
  const char* text;
  int line;
  int column;
};

TEST(TextFormatTest, MalformedInputNamesLineAndColumn) {
  const Malformed cases[] = {
      {"2\n3\n7\n", 2, 2},          // weight count differs from n
      {"2\n3 4 5\n7\n", 2, 5},      // one weight too many
      {"2\n3 4\n7", 3, 2},          // missing trailing newline
      {"2\n3 4\n", 3, 1},           // missing target line
      {"", 1, 1},                   // empty input
      {"x\n3\n7\n", 1, 1},          // bad dimension
      {"0\n\n7\n", 1, 1},           // zero dimension
      {"2\n3  4\n7\n", 2, 3},       // double space
      {"2\n3 +4\n7\n", 2, 3},       // explicit plus sign
      {"2\n3 04\n7\n", 2, 3},       // leading zero
      {"2\n3 4\n-0\n", 3, 1},       // negative zero
      {"2\n3 4\n7\n\n", 4, 1},      // trailing content
      {"2\r\n3 4\n7\n", 1, 1},      // carriage return
  };
  for (const Malformed& c : cases) {
    try {
      ReadInstanceText(c.text);
      ADD_FAILURE() << "accepted: " << ::testing::PrintToString(c.text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << ::testing::PrintToString(c.text);
      EXPECT_EQ(e.column(), c.column) << ::testing::PrintToString(c.text);
    }
  }
}

TEST(TextFormatTest, OverflowIsCapacityError) {
  EXPECT_THROW(
      ReadInstanceText("1\n999999999999999999999999999999999999999999\n0\n"),
      CapacityError);
  // Fits 128 bits but breaks the instance magnitude bound.
  const std::string half = ToString(Pow2(124));
  EXPECT_THROW(ReadInstanceText("2\n" + half + " " + half + "\n1\n"),
               CapacityError);
  EXPECT_THROW(ReadInstanceText("65\n1\n0\n"), CapacityError);
}

TEST(JsonFormatTest, WritesFieldsInOrder) {
  EXPECT_EQ(WriteInstanceJson(MakeInstance({3, 4}, 7)),
            "{\"n\":2,\"a\":[3,4],\"b\":7}\n");
}

TEST(JsonFormatTest, RoundTripIncludingWideValues) {
  for (int i = 0; i < 50; ++i) {
    const Instance inst =
        Generate({1 + i % 48, kAllFamilies[i % 5], static_cast<std::uint64_t>(i), {}});
    EXPECT_EQ(ReadInstanceJson(WriteInstanceJson(inst)), inst);
  }
  const Instance wide({Pow2(90), -3}, -Pow2(70));
  const std::string json = WriteInstanceJson(wide);
  EXPECT_NE(json.find("\"1237940039285380274899124224\""), std::string::npos);
  EXPECT_EQ(ReadInstanceJson(json), wide);
}

TEST(JsonFormatTest, MalformedInput) {
  EXPECT_THROW(ReadInstanceJson("{\"n\":2,\"a\":[3],\"b\":7}"), ParseError);
  EXPECT_THROW(ReadInstanceJson("{\"n\":2,\"a\":[3,4]}"), ParseError);
  EXPECT_THROW(ReadInstanceJson("{\"n\":1,\"a\":[1.5],\"b\":7}"), ParseError);
  try {
    ReadInstanceJson("{\n\"n\": 2,\n\"a\": [3 4]}");
    ADD_FAILURE() << "accepted invalid JSON";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

}  // namespace
}  // namespace subsetsum
