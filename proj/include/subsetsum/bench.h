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

// Experiment plumbing behind the command-line tool: benchmark records and
// their report formats, seeded scaling sweeps, exponent fitting, strategy
// comparison and the differential oracle harness.

#ifndef SUBSETSUM_BENCH_H_
#define SUBSETSUM_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subsetsum/costmodel.h"
#include "subsetsum/instances.h"
#include "subsetsum/solvers.h"

namespace subsetsum {

struct BenchRecord {
  std::string algorithm;
  int n = 0;
  std::uint64_t seed = 0;
  std::string family;
  bool solvable = false;
  std::uint64_t elements_sorted = 0;
  std::uint64_t elements_scanned = 0;
  std::uint64_t comparisons = 0;
  std::int64_t wall_nanos = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

enum class ReportFormat { kCsv, kJsonLines };

std::optional<ReportFormat> ParseReportFormat(std::string_view label);

// CSV header; data rows carry the fields in the same order, solvable as
// true/false. The JSON-lines form writes one object per record with the same
// keys in the same order.
inline constexpr std::string_view kReportHeader =
    "algorithm,n,seed,family,solvable,elements_sorted,elements_scanned,"
    "comparisons,wall_nanos";

void WriteReport(std::span<const BenchRecord> records, ReportFormat format,
                 std::ostream& sink);
// Detects the format from the first byte ('{' means JSON lines). Throws
// ParseError on malformed rows.
std::vector<BenchRecord> ReadReport(std::istream& source);

// Seed for repetition `rep` at dimension `n` of a sweep seeded with `base`.
// SplitMix64 finalizer over base ^ SplitMix64((n << 32) | rep).
std::uint64_t DeriveSeed(std::uint64_t base, int n, int rep);

struct SweepConfig {
  std::vector<Algorithm> algorithms;
  int n_min = 1;
  int n_max = 1;
  int n_step = 1;
  Family family = Family::kParityBlocked;
  int reps = 1;
  std::uint64_t seed = 0;
  SolverLimits limits;
};

// One record per (n, rep, algorithm), ordered by n, then rep, then the
// order of config.algorithms. Pair algorithms skip n < 2.
std::vector<BenchRecord> RunSweep(const SweepConfig& config);

enum class CountField { kElementsSorted, kElementsScanned, kComparisons,
                        kWallNanos };

std::optional<CountField> ParseCountField(std::string_view label);
double CountOf(const BenchRecord& record, CountField field);

struct FitResult {
  double slope = 0;      // log2(count) gained per unit of n
  double intercept = 0;
  double r_squared = 0;  // clamped to [0, 1]
  int n_min = 0;
  int n_max = 0;
  std::size_t points = 0;
};

// Least-squares fit of log2(count) against n. Throws UsageError with fewer
// than three distinct n values or any non-positive count.
FitResult FitExponent(std::span<const std::pair<int, double>> points);

enum class Reduce { kAll, kMin, kMean };
std::optional<Reduce> ParseReduce(std::string_view label);

// Fits the records of `algorithm`; kMin / kMean collapse repetitions to one
// point per n before fitting.
FitResult FitExponent(std::span<const BenchRecord> records,
                      std::string_view algorithm, CountField field,
                      Reduce reduce = Reduce::kAll);

// Measured counters of one pair strategy at one n, against the model.
struct StrategyRow {
  int n = 0;  // subproblem dimension; instances have n + 1 coordinates
  PairStrategy strategy = PairStrategy::kIndependent;
  CostBreakdown analytic;
  std::uint64_t elements_sorted_min = 0;
  std::uint64_t elements_sorted_max = 0;
  std::uint64_t elements_scanned_min = 0;
  std::uint64_t elements_scanned_max = 0;
  double comparisons_mean = 0;
  double wall_nanos_mean = 0;
  bool sort_matches_model = false;  // every run sorted exactly the model count
  bool scan_within_model = false;   // every run scanned at most the model count
};

struct CompareRow {
  int n = 0;
  std::vector<StrategyRow> strategies;  // independent, shared_sort, merged
  // Odd n: totals are exactly 12, 9 and 8 units. Even n: shared_sort and
  // merged totals are equal and below independent.
  bool ratio_check = false;
  bool counters_check = false;
};

struct CompareConfig {
  std::vector<int> n_values;
  Family family = Family::kScanAdversarial;
  int reps = 1;
  std::uint64_t seed = 0;
  SolverLimits limits;
};

std::vector<CompareRow> CompareStrategies(const CompareConfig& config);

struct Disagreement {
  GenSpec spec;
  std::string detail;
};

struct DifferentialReport {
  std::size_t trials = 0;
  std::vector<Disagreement> disagreements;
};

// Runs brute force (when n permits), meet-in-the-middle and the three pair
// strategies on `trials` seeded instances with n cycling through
// [n_min, n_max] and families alternating restricted_uniform / planted.
// Every SOLVABLE certificate is checked with Verify.
DifferentialReport RunDifferential(int trials, int n_min, int n_max,
                                   std::uint64_t seed,
                                   const SolverLimits& limits = {});

}  // namespace subsetsum

#endif  // SUBSETSUM_BENCH_H_
