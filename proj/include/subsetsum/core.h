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

// Problem and witness data model for SUBSET-SUM: given weights a in Z^n and a
// target b, decide whether some x in {0,1}^n has a.x = b.

#ifndef SUBSETSUM_CORE_H_
#define SUBSETSUM_CORE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subsetsum/wide_int.h"

namespace subsetsum {

// Largest dimension an Instance may have. Half-sum masks are 64-bit words.
inline constexpr int kMaxDimension = 64;

// An immutable SUBSET-SUM input. Construction rejects n < 1, n above
// kMaxDimension, and any instance whose sum(|a_i|) + |b| reaches
// kWideMagnitudeLimit, so no partial sum or shifted target derived from it
// can overflow.
class Instance {
 public:
  Instance(std::vector<WideInt> weights, WideInt target);

  int n() const { return static_cast<int>(weights_.size()); }
  std::span<const WideInt> a() const { return weights_; }
  WideInt a(int index) const { return weights_[index]; }
  WideInt b() const { return target_; }

  // The instance over the first `length` coordinates with a new target.
  Instance Prefix(int length, WideInt target) const;

  // sum(|a_i|): bounds every subset sum in absolute value.
  WideInt AbsoluteWeightSum() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<WideInt> weights_;
  WideInt target_;
};

// A 0/1 selection vector.
class Certificate {
 public:
  Certificate() = default;
  // Throws UsageError if any entry is not 0 or 1.
  explicit Certificate(std::vector<std::uint8_t> bits);

  static Certificate Zeros(int n) {
    return Certificate(std::vector<std::uint8_t>(n, 0));
  }

  int size() const { return static_cast<int>(bits_.size()); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  bool operator[](int index) const { return bits_[index] != 0; }

  // A copy with one more coordinate appended.
  Certificate Extended(bool last) const;

  // "1011" style rendering, coordinate 1 first.
  std::string ToString() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Verdict {
  bool solvable = false;
  std::optional<Certificate> certificate;  // present iff solvable

  static Verdict Unsolvable() { return {}; }
  static Verdict Solvable(Certificate witness) {
    return {true, std::move(witness)};
  }
};

// sum a_i x_i, exact. Throws UsageError on length mismatch and CapacityError
// if the sum leaves the 128-bit range.
WideInt Dot(std::span<const WideInt> weights,
            std::span<const std::uint8_t> selection);

// True iff a.x = b. Throws UsageError if the certificate length is not n.
bool Verify(const Instance& instance, const Certificate& certificate);

}  // namespace subsetsum

#endif  // SUBSETSUM_CORE_H_
