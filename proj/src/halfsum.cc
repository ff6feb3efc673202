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

#include "subsetsum/halfsum.h"

#include <algorithm>
#include <iterator>
#include <string>

namespace subsetsum {
namespace {

// Mask words are 64 bits; one bit is reserved so UnionShift can extend.
constexpr int kMaskBits = 63;

void CheckWidth(int width, int max_width) {
  if (width > max_width || width > kMaskBits) {
    throw CapacityError("half width " + std::to_string(width) +
                        " exceeds the configured maximum of " +
                        std::to_string(std::min(max_width, kMaskBits)));
  }
}

}  // namespace

HalfSumTable HalfSumTable::FromUnsorted(std::vector<HalfSum> entries,
                                        CoordinateRange range) {
  if (range.width() < 0 || range.width() > kMaskBits ||
      entries.size() != (std::size_t{1} << range.width())) {
    throw UsageError("half-sum table must hold 2^width entries");
  }
  std::sort(entries.begin(), entries.end(), HalfSumLess);
  return HalfSumTable(std::move(entries), range);
}

std::vector<WideInt> HalfSumTable::Sums() const {
  std::vector<WideInt> sums;
  sums.reserve(entries_.size());
  for (const HalfSum& e : entries_) sums.push_back(e.sum);
  return sums;
}

std::vector<HalfSum> EnumerateHalfUnsorted(std::span<const WideInt> weights,
                                           CoordinateRange range,
                                           int max_width) {
  if (range.begin < 0 || range.end < range.begin ||
      static_cast<std::size_t>(range.end) > weights.size()) {
    throw UsageError("coordinate range [" + std::to_string(range.begin) +
                     ", " + std::to_string(range.end) +
                     ") lies outside the weight vector");
  }
  CheckWidth(range.width(), max_width);

  // Doubling: after coordinate j the list holds masks 0 .. 2^(j+1)-1, and
  // entry k has mask k.
  std::vector<HalfSum> entries;
  entries.reserve(std::size_t{1} << range.width());
  entries.push_back({0, 0});
  for (int j = 0; j < range.width(); ++j) {
    const WideInt weight = weights[range.begin + j];
    const std::uint64_t bit = std::uint64_t{1} << j;
    const std::size_t count = entries.size();
    for (std::size_t k = 0; k < count; ++k) {
      entries.push_back({CheckedAdd(entries[k].sum, weight),
                         entries[k].mask | bit});
    }
  }
  return entries;
}

HalfSumTable EnumerateHalf(std::span<const WideInt> weights,
                           CoordinateRange range, int max_width) {
  return HalfSumTable::FromUnsorted(
      EnumerateHalfUnsorted(weights, range, max_width), range);
}

HalfSumTable ShiftNegate(const HalfSumTable& table, WideInt target) {
  const auto& in = table.entries();
  std::vector<HalfSum> out;
  out.reserve(in.size());
  for (auto it = in.rbegin(); it != in.rend(); ++it) {
    out.push_back({CheckedSub(target, it->sum), it->mask});
  }
  // Reversal flips mask order inside each run of equal sums; flip it back.
  for (std::size_t start = 0; start < out.size();) {
    std::size_t stop = start + 1;
    while (stop < out.size() && out[stop].sum == out[start].sum) ++stop;
    std::reverse(out.begin() + start, out.begin() + stop);
    start = stop;
  }
  return HalfSumTable(std::move(out), table.range());
}

HalfSumTable UnionShift(const HalfSumTable& table, WideInt offset) {
  const CoordinateRange range = table.range();
  CheckWidth(range.width() + 1, kMaskBits);
  const std::uint64_t bit = std::uint64_t{1} << range.width();

  std::vector<HalfSum> shifted;
  shifted.reserve(table.size());
  for (const HalfSum& e : table.entries()) {
    shifted.push_back({CheckedAdd(e.sum, offset), e.mask | bit});
  }
  std::vector<HalfSum> merged;
  merged.reserve(2 * table.size());
  std::merge(table.entries().begin(), table.entries().end(), shifted.begin(),
             shifted.end(), std::back_inserter(merged), HalfSumLess);
  return HalfSumTable(std::move(merged), {range.begin, range.end + 1});
}

std::vector<HalfSum> UnionShiftUnsorted(std::span<const HalfSum> entries,
                                        CoordinateRange range,
                                        WideInt offset) {
  CheckWidth(range.width() + 1, kMaskBits);
  const std::uint64_t bit = std::uint64_t{1} << range.width();
  std::vector<HalfSum> out(entries.begin(), entries.end());
  out.reserve(2 * entries.size());
  for (const HalfSum& e : entries) {
    out.push_back({CheckedAdd(e.sum, offset), e.mask | bit});
  }
  return out;
}

ScanOutcome TwoPointerScan(std::span<const HalfSum> left,
                           std::span<const HalfSum> right) {
  ScanOutcome outcome;
  if (left.empty() || right.empty()) return outcome;

  std::size_t i = 0;
  std::size_t j = 0;
  outcome.elements_visited = 2;
  while (true) {
    ++outcome.comparisons;
    const WideInt lhs = left[i].sum;
    const WideInt rhs = right[j].sum;
    if (lhs == rhs) {
      outcome.matched = true;
      outcome.left_index = i;
      outcome.right_index = j;
      return outcome;
    }
    if (lhs < rhs) {
      if (++i == left.size()) return outcome;
    } else {
      if (++j == right.size()) return outcome;
    }
    ++outcome.elements_visited;
  }
}

}  // namespace subsetsum
