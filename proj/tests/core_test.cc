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

#include "subsetsum/core.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

namespace subsetsum {
namespace {

using testing::AllSubsetSums;
using testing::MakeInstance;
using testing::SelectionOf;

std::vector<WideInt> Weights(std::initializer_list<long long> values) {
  return std::vector<WideInt>(values.begin(), values.end());
}

TEST(DotTest, SumOfAllEntries) {
  const auto a = Weights({3, 4});
  const std::vector<std::uint8_t> x = {1, 1};
  EXPECT_EQ(Dot(a, x), 7);
}

TEST(DotTest, EmptySelection) {
  const auto a = Weights({5});
  const std::vector<std::uint8_t> x = {0};
  EXPECT_EQ(Dot(a, x), 0);
}

TEST(DotTest, MixedSignsMatchEnumeration) {
  const auto a = Weights({8, -3, 5, 2});
  const std::vector<std::uint8_t> x = {1, 0, 0, 1};
  EXPECT_EQ(Dot(a, x), 10);
  // Oracle: the 16 dot products, indexed with coordinate 0 as the low bit.
  // [1,0,0,1] is index 0b1001 = 9.
  const std::vector<WideInt> all = AllSubsetSums(a);
  ASSERT_EQ(all.size(), 16u);
  EXPECT_EQ(all[9], 10);
  for (std::uint64_t k = 0; k < 16; ++k) {
    EXPECT_EQ(Dot(a, SelectionOf(k, 4)), all[k]) << "selection " << k;
  }
}

TEST(DotTest, LengthMismatchIsUsageError) {
  const auto a = Weights({1, 2});
  const std::vector<std::uint8_t> x = {1};
  EXPECT_THROW(Dot(a, x), UsageError);
}

TEST(VerifyTest, Examples) {
  EXPECT_TRUE(Verify(MakeInstance({3, 4}, 7), Certificate({1, 1})));
  EXPECT_TRUE(Verify(MakeInstance({5}, 0), Certificate({0})));
  EXPECT_FALSE(Verify(MakeInstance({2, 4, 6}, 5), Certificate({1, 1, 0})));
}

TEST(VerifyTest, LengthMismatchIsUsageError) {
  EXPECT_THROW(Verify(MakeInstance({3, 4}, 7), Certificate({1})), UsageError);
}

TEST(CertificateTest, RejectsNonBinaryEntries) {
  EXPECT_THROW(Certificate({0, 2}), UsageError);
}

TEST(CertificateTest, RendersCoordinateOneFirst) {
  EXPECT_EQ(Certificate({1, 0, 1, 1}).ToString(), "1011");
  EXPECT_EQ(Certificate({1, 0}).Extended(true).ToString(), "101");
}

TEST(InstanceTest, RejectsEmptyWeights) {
  EXPECT_THROW(Instance({}, 0), UsageError);
}

TEST(InstanceTest, RejectsDimensionAboveMaximum) {
  EXPECT_THROW(Instance(std::vector<WideInt>(kMaxDimension + 1, 1), 0),
               CapacityError);
  EXPECT_NO_THROW(Instance(std::vector<WideInt>(kMaxDimension, 1), 0));
}

TEST(InstanceTest, RejectsMagnitudeAtCapacity) {
  const WideInt half = kWideMagnitudeLimit / 2;
  EXPECT_NO_THROW(Instance({half - 1}, half - 1));
  EXPECT_THROW(Instance({half}, half), CapacityError);
  EXPECT_THROW(Instance({kWideMagnitudeLimit}, 0), CapacityError);
}

TEST(InstanceTest, PrefixKeepsLeadingWeights) {
  const Instance inst = MakeInstance({1, 2, 3}, 6);
  const Instance prefix = inst.Prefix(2, 3);
  EXPECT_EQ(prefix, MakeInstance({1, 2}, 3));
  EXPECT_THROW(inst.Prefix(0, 0), UsageError);
  EXPECT_THROW(inst.Prefix(4, 0), UsageError);
}

TEST(CorePropertyTest, ZeroVectorVerifiesIffTargetIsZero) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<WideInt> a(n);
    for (auto& w : a) w = static_cast<long long>(rng() % 41) - 20;
    const WideInt b = static_cast<long long>(rng() % 5) - 2;
    const Instance inst(a, b);
    EXPECT_EQ(Verify(inst, Certificate::Zeros(n)), b == 0);
  }
}

TEST(CorePropertyTest, DotDistributesOverConcatenation) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<WideInt> a(n);
    std::vector<std::uint8_t> x(n);
    for (int i = 0; i < n; ++i) {
      a[i] = static_cast<long long>(rng() % 2001) - 1000;
      x[i] = rng() & 1U;
    }
    const WideInt extra = static_cast<long long>(rng() % 2001) - 1000;
    std::vector<WideInt> a_ext = a;
    a_ext.push_back(extra);
    std::vector<std::uint8_t> x_ext = x;
    x_ext.push_back(1);
    EXPECT_EQ(Dot(a_ext, x_ext), Dot(a, x) + extra);
  }
}

TEST(WideIntTest, DecimalRoundTripAtExtremes) {
  const WideInt max = static_cast<WideInt>(~static_cast<unsigned __int128>(0) >> 1);
  const WideInt min = -max - 1;
  for (WideInt v : {WideInt{0}, WideInt{-1}, WideInt{42}, max, min}) {
    const auto parsed = ParseWideInt(ToString(v));
    ASSERT_TRUE(parsed.has_value()) << ToString(v);
    EXPECT_EQ(*parsed, v);
  }
  EXPECT_EQ(ToString(min), "-170141183460469231731687303715884105728");
}

TEST(WideIntTest, RejectsNonCanonicalText) {
  for (const char* text : {"", "-", "+1", "01", "-0", "1 ", "1a",
                           "170141183460469231731687303715884105728"}) {
    EXPECT_FALSE(ParseWideInt(text).has_value()) << text;
  }
}

TEST(WideIntTest, CheckedArithmeticThrowsOnOverflow) {
  const WideInt max = static_cast<WideInt>(~static_cast<unsigned __int128>(0) >> 1);
  EXPECT_THROW(CheckedAdd(max, 1), CapacityError);
  EXPECT_THROW(CheckedSub(-max - 1, 1), CapacityError);
  EXPECT_EQ(CheckedAdd(2, 3), 5);
}

}  // namespace
}  // namespace subsetsum
