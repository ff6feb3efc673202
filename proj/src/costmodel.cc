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

#include "subsetsum/costmodel.h"

#include <numeric>

#include "subsetsum/wide_int.h"

namespace subsetsum {
namespace {

void CheckDimension(int n) {
  if (n < 1 || n > kMaxAnalyticDimension) {
    throw UsageError("analytic cost needs 1 <= n <= " +
                     std::to_string(kMaxAnalyticDimension) + ", got " +
                     std::to_string(n));
  }
}

CostBreakdown Breakdown(std::uint64_t unit, std::uint64_t sort,
                        std::uint64_t scan) {
  const auto u = static_cast<std::int64_t>(unit);
  CostBreakdown out;
  out.unit_elements = unit;
  out.sort_elements = sort;
  out.scan_elements = scan;
  out.sort_units = Rational::Of(static_cast<std::int64_t>(sort), u);
  out.scan_units = Rational::Of(static_cast<std::int64_t>(scan), u);
  out.total_units = out.sort_units + out.scan_units;
  return out;
}

}  // namespace

std::string_view PairStrategyLabel(PairStrategy strategy) {
  switch (strategy) {
    case PairStrategy::kIndependent:
      return "independent";
    case PairStrategy::kSharedSort:
      return "shared_sort";
    case PairStrategy::kMerged:
      return "merged";
  }
  return "unknown";
}

Rational Rational::Of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(Rational lhs, Rational rhs) {
  const std::int64_t g = std::gcd(lhs.den, rhs.den);
  return Rational::Of(lhs.num * (rhs.den / g) + rhs.num * (lhs.den / g),
                      lhs.den / g * rhs.den);
}

bool operator<(Rational lhs, Rational rhs) {
  return static_cast<__int128>(lhs.num) * rhs.den <
         static_cast<__int128>(rhs.num) * lhs.den;
}

CostBreakdown AnalyticCost(PairStrategy strategy, int n) {
  CheckDimension(n);
  const std::uint64_t lower = std::uint64_t{1} << (n / 2);
  const std::uint64_t upper = std::uint64_t{1} << ((n + 1) / 2);
  const std::uint64_t both = lower + upper;
  switch (strategy) {
    case PairStrategy::kIndependent:
      return Breakdown(lower, 2 * both, 2 * both);
    case PairStrategy::kSharedSort:
      return Breakdown(lower, both, 2 * both);
    case PairStrategy::kMerged:
      return Breakdown(lower, 2 * lower + upper, 2 * lower + upper);
  }
  throw UsageError("unknown pair strategy");
}

CostBreakdown AnalyticMeetInMiddleCost(int n) {
  CheckDimension(n);
  const std::uint64_t lower = std::uint64_t{1} << (n / 2);
  const std::uint64_t upper = std::uint64_t{1} << ((n + 1) / 2);
  return Breakdown(lower, lower + upper, lower + upper);
}

StrategyCost AttachCounters(const RunCounters& run,
                            std::optional<CostBreakdown> analytic) {
  StrategyCost cost;
  cost.elements_sorted = run.elements_sorted_;
  cost.elements_scanned = run.elements_scanned_;
  cost.comparisons = run.comparisons_;
  cost.wall_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - run.start_)
                        .count();
  cost.analytic = std::move(analytic);
  return cost;
}

}  // namespace subsetsum
