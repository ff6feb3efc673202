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

// Meet-in-the-middle machinery: half-set sum enumeration, sorted half-sum
// tables, and the two-pointer scan that looks for a common value in two
// ascending lists.
//
// Coordinates are 0-based here. A half covering coordinates [begin, end)
// stores, for each entry, a mask whose bit j selects coordinate begin + j.

#ifndef SUBSETSUM_HALFSUM_H_
#define SUBSETSUM_HALFSUM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subsetsum/wide_int.h"

namespace subsetsum {

inline constexpr int kDefaultMaxHalfWidth = 24;

struct CoordinateRange {
  int begin = 0;
  int end = 0;

  int width() const { return end - begin; }
  friend bool operator==(CoordinateRange, CoordinateRange) = default;
};

struct HalfSum {
  WideInt sum = 0;
  std::uint64_t mask = 0;

  friend bool operator==(const HalfSum&, const HalfSum&) = default;
};

// Ordering used by every table: ascending sum, ties by mask as a number.
inline bool HalfSumLess(const HalfSum& lhs, const HalfSum& rhs) {
  if (lhs.sum != rhs.sum) return lhs.sum < rhs.sum;
  return lhs.mask < rhs.mask;
}

// A multiset of half-subset sums with witness masks, sorted by HalfSumLess.
// Holds 2^width entries for the coordinate range it covers.
class HalfSumTable {
 public:
  HalfSumTable() = default;

  // Sorts `entries` and wraps them. Throws UsageError if the entry count is
  // not 2^range.width().
  static HalfSumTable FromUnsorted(std::vector<HalfSum> entries,
                                   CoordinateRange range);

  const std::vector<HalfSum>& entries() const { return entries_; }
  CoordinateRange range() const { return range_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const HalfSum& operator[](std::size_t i) const { return entries_[i]; }

  std::vector<WideInt> Sums() const;

 private:
  friend HalfSumTable ShiftNegate(const HalfSumTable&, WideInt);
  friend HalfSumTable UnionShift(const HalfSumTable&, WideInt);

  HalfSumTable(std::vector<HalfSum> sorted, CoordinateRange range)
      : entries_(std::move(sorted)), range_(range) {}

  std::vector<HalfSum> entries_;
  CoordinateRange range_;
};

// All 2^width subset sums over `range`, in increasing mask order (unsorted
// by sum). Throws CapacityError if the width exceeds `max_width` and
// UsageError if the range falls outside the weight vector.
std::vector<HalfSum> EnumerateHalfUnsorted(
    std::span<const WideInt> weights, CoordinateRange range,
    int max_width = kDefaultMaxHalfWidth);

// EnumerateHalfUnsorted followed by a sort.
HalfSumTable EnumerateHalf(std::span<const WideInt> weights,
                           CoordinateRange range,
                           int max_width = kDefaultMaxHalfWidth);

// The table of b - s for every entry s, ascending, masks preserved. Runs in
// linear time: the input order is reversed and each run of equal sums is
// restored to ascending mask order.
HalfSumTable ShiftNegate(const HalfSumTable& table, WideInt target);

// The multiset union of `table` and `table + offset`. The range grows by one
// coordinate at its end; the new mask bit records whether the offset was
// applied. Linear-time merge of two sorted lists.
HalfSumTable UnionShift(const HalfSumTable& table, WideInt offset);

// Unsorted counterpart: appends a shifted copy of `entries` (covering
// `range`) with the new high mask bit set. Order: originals, then shifted.
std::vector<HalfSum> UnionShiftUnsorted(std::span<const HalfSum> entries,
                                        CoordinateRange range, WideInt offset);

struct ScanOutcome {
  bool matched = false;
  std::optional<std::size_t> left_index;
  std::optional<std::size_t> right_index;
  // Distinct pointer positions examined, both initial heads included.
  std::uint64_t elements_visited = 0;
  // Value comparisons performed.
  std::uint64_t comparisons = 0;
};

// Walks two ascending lists from their heads. Equal values stop the walk
// with a match; otherwise the pointer holding the smaller value advances.
// Stops unmatched as soon as either list runs out. An empty input gives an
// unmatched outcome with zero visits.
ScanOutcome TwoPointerScan(std::span<const HalfSum> left,
                           std::span<const HalfSum> right);

inline ScanOutcome TwoPointerScan(const HalfSumTable& left,
                                  const HalfSumTable& right) {
  return TwoPointerScan(std::span<const HalfSum>(left.entries()),
                        std::span<const HalfSum>(right.entries()));
}

}  // namespace subsetsum

#endif  // SUBSETSUM_HALFSUM_H_
