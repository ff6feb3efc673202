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

// Complete, instrumented SUBSET-SUM deciders.
//
//  * BruteForce: all 2^n selection vectors in lexicographic order.
//  * MeetInMiddle: split at ceil(n/2); the head half gives S+ and the tail
//    half S-. b - S- and S+ are sorted and walked with a two-pointer scan.
//  * SolvePair*: a size-(n+1) instance is solvable iff b or b - a_{n+1} is a
//    subset sum of the first n weights. The three pair strategies decide
//    both subproblems with different amounts of sharing:
//      - independent: two meet-in-the-middle runs from scratch;
//      - shared_sort: one pair of sorted tables, scanned once per target;
//      - merged: sort S- u (S- + a_{n+1}) and S+, then a single scan.
//    For odd n the merged strategy performs exactly the same work as
//    MeetInMiddle on the full size-(n+1) instance.

#ifndef SUBSETSUM_SOLVERS_H_
#define SUBSETSUM_SOLVERS_H_

#include <optional>
#include <string_view>

#include "subsetsum/core.h"
#include "subsetsum/costmodel.h"
#include "subsetsum/halfsum.h"

namespace subsetsum {

enum class Algorithm {
  kBruteForce,
  kMeetInMiddle,
  kPairIndependent,
  kPairSharedSort,
  kPairMerged,
};

// CLI labels: brute, mitm, pair-independent, pair-shared, pair-merged.
std::string_view AlgorithmLabel(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view label);
bool IsPairAlgorithm(Algorithm algorithm);

struct SolverLimits {
  int max_brute_dimension = 26;
  int max_half_width = kDefaultMaxHalfWidth;
};

struct SolveReport {
  Verdict verdict;
  StrategyCost cost;
  Algorithm algorithm = Algorithm::kBruteForce;
};

// Verdicts for the two size-n subproblems of a size-(n+1) instance. A
// subproblem verdict is empty when the strategy stopped before deciding it
// (the merged strategy halts at its first match).
struct PairVerdict {
  std::optional<Verdict> base;     // target b
  std::optional<Verdict> shifted;  // target b - a_{n+1}
  bool combined = false;
};

struct PairSolve {
  PairVerdict pair;
  // Verdict for the full size-(n+1) instance; a witness ends in 0 when it
  // came from the base subproblem and in 1 when it came from the shifted one.
  SolveReport report;
};

// Returns the lexicographically smallest witness. Counters record one
// element scanned per vector touched. Throws CapacityError when n exceeds
// limits.max_brute_dimension.
SolveReport BruteForce(const Instance& instance,
                       const SolverLimits& limits = {});

SolveReport MeetInMiddle(const Instance& instance,
                         const SolverLimits& limits = {});

// All three require n + 1 >= 2; the last coordinate plays a_{n+1}.
PairSolve SolvePairIndependent(const Instance& instance,
                               const SolverLimits& limits = {});
PairSolve SolvePairSharedSort(const Instance& instance,
                              const SolverLimits& limits = {});
PairSolve SolvePairMerged(const Instance& instance,
                          const SolverLimits& limits = {});

// Dispatches on `algorithm`; pair strategies report the full-instance
// verdict.
SolveReport Solve(const Instance& instance, Algorithm algorithm,
                  const SolverLimits& limits = {});

}  // namespace subsetsum

#endif  // SUBSETSUM_SOLVERS_H_
