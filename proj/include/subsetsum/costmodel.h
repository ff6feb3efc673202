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

// Unit-cost accounting for the meet-in-the-middle solvers.
//
// The model assumes constant-time arithmetic and linear-time sorting, so a
// strategy costs one unit of work per element it sorts and one per element
// it walks in a scan. Costs are reported in units of u = 2^floor(n/2)
// elements, where n is the dimension of the two subproblems a size-(n+1)
// instance splits into. With L- = 2^floor(n/2) and L+ = 2^ceil(n/2):
//
//   independent  sort 2(L- + L+)     scan 2(L- + L+)
//   shared_sort  sort   L- + L+      scan 2(L- + L+)
//   merged       sort  2L- + L+      scan  2L- + L+
//
// For odd n that is 12 : 9 : 8 units; for even n it is 8 : 6 : 6.

#ifndef SUBSETSUM_COSTMODEL_H_
#define SUBSETSUM_COSTMODEL_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "subsetsum/halfsum.h"

namespace subsetsum {

enum class PairStrategy { kIndependent, kSharedSort, kMerged };

std::string_view PairStrategyLabel(PairStrategy strategy);

// Exact fraction in lowest terms with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational Of(std::int64_t num, std::int64_t den = 1);
  bool IsInteger() const { return den == 1; }
  std::string ToString() const;

  friend Rational operator+(Rational lhs, Rational rhs);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(Rational lhs, Rational rhs);
};

struct CostBreakdown {
  Rational sort_units;
  Rational scan_units;
  Rational total_units;
  // The same quantities in raw elements; unit_elements is u.
  std::uint64_t unit_elements = 0;
  std::uint64_t sort_elements = 0;
  std::uint64_t scan_elements = 0;
};

// Largest n accepted by the analytic formulas.
inline constexpr int kMaxAnalyticDimension = 60;

// Worst-case cost of solving the two size-n subproblems of a size-(n+1)
// instance with `strategy`. Throws UsageError unless 1 <= n <= 60.
CostBreakdown AnalyticCost(PairStrategy strategy, int n);

// Worst-case cost of one meet-in-the-middle run on a size-n instance,
// in units of 2^floor(n/2). Throws UsageError unless 1 <= n <= 60.
CostBreakdown AnalyticMeetInMiddleCost(int n);

// Counters for one solving run. Sort and scan counts are exact and
// deterministic; wall time is the only nondeterministic field.
struct StrategyCost {
  std::uint64_t elements_sorted = 0;
  std::uint64_t elements_scanned = 0;
  std::uint64_t comparisons = 0;
  std::int64_t wall_nanos = 0;
  // Analytic prediction for the run, when the algorithm has one.
  std::optional<CostBreakdown> analytic;
};

// Collects counters while a solver runs. The clock starts at construction.
class RunCounters {
 public:
  RunCounters() : start_(std::chrono::steady_clock::now()) {}

  // Charges every element of a list handed to a sort.
  void RecordSort(std::uint64_t elements) { elements_sorted_ += elements; }
  void RecordScan(const ScanOutcome& outcome) {
    elements_scanned_ += outcome.elements_visited;
    comparisons_ += outcome.comparisons;
  }
  // Brute-force enumeration: each vector touched is one element examined
  // and one comparison against the target.
  void RecordVectors(std::uint64_t touched) {
    elements_scanned_ += touched;
    comparisons_ += touched;
  }

 private:
  friend StrategyCost AttachCounters(const RunCounters&,
                                     std::optional<CostBreakdown>);

  std::chrono::steady_clock::time_point start_;
  std::uint64_t elements_sorted_ = 0;
  std::uint64_t elements_scanned_ = 0;
  std::uint64_t comparisons_ = 0;
};

// Snapshots the counters, stamping wall time since the run started.
StrategyCost AttachCounters(const RunCounters& run,
                            std::optional<CostBreakdown> analytic = {});

}  // namespace subsetsum

#endif  // SUBSETSUM_COSTMODEL_H_
