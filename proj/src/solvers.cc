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

#include "subsetsum/solvers.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace subsetsum {
namespace {

int HeadWidth(int n) { return (n + 1) / 2; }

// Sets the certificate bits selected by `entry`, a member of a table that
// covers `range`.
void Decode(const HalfSum& entry, CoordinateRange range,
            std::vector<std::uint8_t>& bits) {
  for (int j = 0; j < range.width(); ++j) {
    if ((entry.mask >> j) & 1U) bits[range.begin + j] = 1;
  }
}

// One scan of (target - tail) against head. On a match, rebuilds a witness
// of length `dimension`.
Verdict ScanForTarget(const HalfSumTable& head, const HalfSumTable& tail,
                      WideInt target, int dimension, RunCounters& counters) {
  const HalfSumTable reflected = ShiftNegate(tail, target);
  const ScanOutcome outcome = TwoPointerScan(reflected, head);
  counters.RecordScan(outcome);
  if (!outcome.matched) return Verdict::Unsolvable();

  std::vector<std::uint8_t> bits(dimension, 0);
  Decode(reflected[*outcome.left_index], reflected.range(), bits);
  Decode(head[*outcome.right_index], head.range(), bits);
  return Verdict::Solvable(Certificate(std::move(bits)));
}

void CheckWitness(const Instance& instance, const Verdict& verdict) {
  if (verdict.solvable && !Verify(instance, *verdict.certificate)) {
    throw std::logic_error("solver produced a certificate that fails verify");
  }
}

Verdict MeetInMiddleInto(const Instance& instance, const SolverLimits& limits,
                         RunCounters& counters) {
  const int n = instance.n();
  const int h = HeadWidth(n);
  const HalfSumTable head =
      EnumerateHalf(instance.a(), {0, h}, limits.max_half_width);
  counters.RecordSort(head.size());
  const HalfSumTable tail =
      EnumerateHalf(instance.a(), {h, n}, limits.max_half_width);
  counters.RecordSort(tail.size());
  Verdict verdict = ScanForTarget(head, tail, instance.b(), n, counters);
  CheckWitness(instance, verdict);
  return verdict;
}

struct PairSetup {
  Instance base;     // first n weights, target b
  Instance shifted;  // first n weights, target b - a_{n+1}
  WideInt last_weight;
};

PairSetup SplitPair(const Instance& instance) {
  if (instance.n() < 2) {
    throw UsageError("pair strategies need an instance of dimension >= 2");
  }
  const int n = instance.n() - 1;
  const WideInt last = instance.a(n);
  return {instance.Prefix(n, instance.b()),
          instance.Prefix(n, CheckedSub(instance.b(), last)), last};
}

// Full-instance verdict from the two subproblem verdicts.
Verdict Lift(const PairVerdict& pair) {
  if (pair.base && pair.base->solvable) {
    return Verdict::Solvable(pair.base->certificate->Extended(false));
  }
  if (pair.shifted && pair.shifted->solvable) {
    return Verdict::Solvable(pair.shifted->certificate->Extended(true));
  }
  return Verdict::Unsolvable();
}

PairSolve FinishPair(const Instance& instance, PairVerdict pair,
                     PairStrategy strategy, Algorithm algorithm,
                     const RunCounters& counters) {
  pair.combined = (pair.base && pair.base->solvable) ||
                  (pair.shifted && pair.shifted->solvable);
  PairSolve out;
  out.report.verdict = Lift(pair);
  CheckWitness(instance, out.report.verdict);
  out.report.algorithm = algorithm;
  out.report.cost =
      AttachCounters(counters, AnalyticCost(strategy, instance.n() - 1));
  out.pair = std::move(pair);
  return out;
}

}  // namespace

std::string_view AlgorithmLabel(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBruteForce:
      return "brute";
    case Algorithm::kMeetInMiddle:
      return "mitm";
    case Algorithm::kPairIndependent:
      return "pair-independent";
    case Algorithm::kPairSharedSort:
      return "pair-shared";
    case Algorithm::kPairMerged:
      return "pair-merged";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view label) {
  for (Algorithm a :
       {Algorithm::kBruteForce, Algorithm::kMeetInMiddle,
        Algorithm::kPairIndependent, Algorithm::kPairSharedSort,
        Algorithm::kPairMerged}) {
    if (AlgorithmLabel(a) == label) return a;
  }
  return std::nullopt;
}

bool IsPairAlgorithm(Algorithm algorithm) {
  return algorithm == Algorithm::kPairIndependent ||
         algorithm == Algorithm::kPairSharedSort ||
         algorithm == Algorithm::kPairMerged;
}

SolveReport BruteForce(const Instance& instance, const SolverLimits& limits) {
  const int n = instance.n();
  if (n > limits.max_brute_dimension) {
    throw CapacityError("brute force limited to n <= " +
                        std::to_string(limits.max_brute_dimension) +
                        ", got n = " + std::to_string(n));
  }
  RunCounters counters;

  // Coordinate i is bit n-1-i of the counter, so counting up walks the
  // vectors in lexicographic order. tail[t] is the sum of the last t
  // weights: the coordinates cleared when t trailing ones roll over.
  std::vector<WideInt> tail(n + 1, 0);
  for (int t = 1; t <= n; ++t) tail[t] = tail[t - 1] + instance.a(n - t);

  const std::uint64_t total = std::uint64_t{1} << n;
  const WideInt target = instance.b();
  WideInt sum = 0;
  std::uint64_t found = total;
  for (std::uint64_t k = 0;; ++k) {
    if (sum == target) {
      found = k;
      break;
    }
    if (k + 1 == total) break;
    const int t = __builtin_ctzll(~k);
    sum += instance.a(n - 1 - t) - tail[t];
  }

  SolveReport report;
  report.algorithm = Algorithm::kBruteForce;
  if (found == total) {
    counters.RecordVectors(total);
    report.verdict = Verdict::Unsolvable();
  } else {
    counters.RecordVectors(found + 1);
    std::vector<std::uint8_t> bits(n);
    for (int i = 0; i < n; ++i) bits[i] = (found >> (n - 1 - i)) & 1U;
    report.verdict = Verdict::Solvable(Certificate(std::move(bits)));
  }
  CheckWitness(instance, report.verdict);
  report.cost = AttachCounters(counters);
  return report;
}

SolveReport MeetInMiddle(const Instance& instance,
                         const SolverLimits& limits) {
  RunCounters counters;
  SolveReport report;
  report.algorithm = Algorithm::kMeetInMiddle;
  report.verdict = MeetInMiddleInto(instance, limits, counters);
  report.cost = AttachCounters(counters);
  return report;
}

PairSolve SolvePairIndependent(const Instance& instance,
                               const SolverLimits& limits) {
  const PairSetup setup = SplitPair(instance);
  RunCounters counters;
  PairVerdict pair;
  pair.base = MeetInMiddleInto(setup.base, limits, counters);
  pair.shifted = MeetInMiddleInto(setup.shifted, limits, counters);
  return FinishPair(instance, std::move(pair), PairStrategy::kIndependent,
                    Algorithm::kPairIndependent, counters);
}

PairSolve SolvePairSharedSort(const Instance& instance,
                              const SolverLimits& limits) {
  const PairSetup setup = SplitPair(instance);
  const int n = setup.base.n();
  const int h = HeadWidth(n);
  RunCounters counters;
  const HalfSumTable head =
      EnumerateHalf(setup.base.a(), {0, h}, limits.max_half_width);
  counters.RecordSort(head.size());
  const HalfSumTable tail =
      EnumerateHalf(setup.base.a(), {h, n}, limits.max_half_width);
  counters.RecordSort(tail.size());

  PairVerdict pair;
  pair.base = ScanForTarget(head, tail, setup.base.b(), n, counters);
  pair.shifted = ScanForTarget(head, tail, setup.shifted.b(), n, counters);
  CheckWitness(setup.base, *pair.base);
  CheckWitness(setup.shifted, *pair.shifted);
  return FinishPair(instance, std::move(pair), PairStrategy::kSharedSort,
                    Algorithm::kPairSharedSort, counters);
}

PairSolve SolvePairMerged(const Instance& instance,
                          const SolverLimits& limits) {
  const PairSetup setup = SplitPair(instance);
  const int n = setup.base.n();
  const int h = HeadWidth(n);
  if (n - h + 1 > limits.max_half_width) {
    throw CapacityError("merged half width " + std::to_string(n - h + 1) +
                        " exceeds the configured maximum of " +
                        std::to_string(limits.max_half_width));
  }
  RunCounters counters;
  const HalfSumTable head =
      EnumerateHalf(setup.base.a(), {0, h}, limits.max_half_width);
  counters.RecordSort(head.size());

  // S- u (S- + a_{n+1}) is assembled unsorted and sorted once; its extra
  // mask bit lands on coordinate n, the last coordinate of the instance.
  const std::vector<HalfSum> tail_raw =
      EnumerateHalfUnsorted(setup.base.a(), {h, n}, limits.max_half_width);
  HalfSumTable merged = HalfSumTable::FromUnsorted(
      UnionShiftUnsorted(tail_raw, {h, n}, setup.last_weight), {h, n + 1});
  counters.RecordSort(merged.size());

  const Verdict full =
      ScanForTarget(head, merged, instance.b(), instance.n(), counters);

  PairVerdict pair;
  if (!full.solvable) {
    pair.base = Verdict::Unsolvable();
    pair.shifted = Verdict::Unsolvable();
  } else {
    const auto bits = full.certificate->bits();
    Certificate prefix(std::vector<std::uint8_t>(bits.begin(), bits.end() - 1));
    if (bits.back()) {
      pair.shifted = Verdict::Solvable(std::move(prefix));
    } else {
      pair.base = Verdict::Solvable(std::move(prefix));
    }
  }
  return FinishPair(instance, std::move(pair), PairStrategy::kMerged,
                    Algorithm::kPairMerged, counters);
}

SolveReport Solve(const Instance& instance, Algorithm algorithm,
                  const SolverLimits& limits) {
  switch (algorithm) {
    case Algorithm::kBruteForce:
      return BruteForce(instance, limits);
    case Algorithm::kMeetInMiddle:
      return MeetInMiddle(instance, limits);
    case Algorithm::kPairIndependent:
      return SolvePairIndependent(instance, limits).report;
    case Algorithm::kPairSharedSort:
      return SolvePairSharedSort(instance, limits).report;
    case Algorithm::kPairMerged:
      return SolvePairMerged(instance, limits).report;
  }
  throw UsageError("unknown algorithm");
}

}  // namespace subsetsum
