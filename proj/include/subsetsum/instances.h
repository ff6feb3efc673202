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

// Seeded instance generators and the instance file formats.
//
// Generators draw from std::mt19937_64 seeded with GenSpec::seed. The
// engine's output sequence is fixed by the C++ standard; bounded draws use
// rejection against the threshold (2^64 - range) mod range followed by
// `mod range`, so a seed reproduces the same instance on every platform.
// Draw order is documented per family in instances.cc.
//
// Every family stays inside the restricted range |a_i| < 2^n, |b| < n * 2^n.
//
// Canonical text format (bit-exact):
//
//   <n>\n
//   <a_1> <a_2> ... <a_n>\n
//   <b>\n
//
// Integers are signed decimal without '+' or leading zeros; weights are
// separated by one space; the final newline is required and nothing may
// follow it.
//
// Structured format: one JSON object {"n":<int>,"a":[...],"b":<int>}
// followed by a newline, keys in that order. An integer that does not fit a
// signed 64-bit value is written as a decimal string; the reader accepts
// either form.

#ifndef SUBSETSUM_INSTANCES_H_
#define SUBSETSUM_INSTANCES_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subsetsum/core.h"

namespace subsetsum {

enum class Family {
  kRestrictedUniform,
  kPlanted,
  kDistinctSums,
  kParityBlocked,
  kScanAdversarial,
};

std::string_view FamilyLabel(Family family);
std::optional<Family> ParseFamily(std::string_view label);

// Largest dimension the generators accept.
inline constexpr int kMaxGenDimension = 48;

struct GenSpec {
  int n = 1;
  Family family = Family::kRestrictedUniform;
  std::uint64_t seed = 0;
  // Only distinct_sums reads this: true picks b inside S, false outside,
  // unset draws b from the whole restricted range.
  std::optional<bool> solvable_hint;
};

struct GeneratedInstance {
  Instance instance;
  // A known witness when the family guarantees one (planted, and
  // distinct_sums with a solvable target).
  std::optional<Certificate> witness;
};

// Throws CapacityError unless 1 <= n <= kMaxGenDimension.
GeneratedInstance GenerateWithWitness(const GenSpec& spec);
inline Instance Generate(const GenSpec& spec) {
  return GenerateWithWitness(spec).instance;
}

// A malformed instance file. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

std::string WriteInstanceText(const Instance& instance);
void WriteInstanceText(const Instance& instance, std::ostream& sink);

// Throws ParseError on malformed text and CapacityError when a value or the
// instance exceeds 128-bit capacity.
Instance ReadInstanceText(std::string_view text);
Instance ReadInstanceText(std::istream& source);

std::string WriteInstanceJson(const Instance& instance);
Instance ReadInstanceJson(std::string_view text);

}  // namespace subsetsum

#endif  // SUBSETSUM_INSTANCES_H_
