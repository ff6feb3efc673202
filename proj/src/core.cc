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

#include <string>
#include <utility>

namespace subsetsum {

Instance::Instance(std::vector<WideInt> weights, WideInt target)
    : weights_(std::move(weights)), target_(target) {
  if (weights_.empty()) {
    throw UsageError("instance dimension must be at least 1");
  }
  if (n() > kMaxDimension) {
    throw CapacityError("instance dimension " + std::to_string(n()) +
                        " exceeds the maximum of " +
                        std::to_string(kMaxDimension));
  }
  // Each term is bounded before accumulation so the running total cannot
  // wrap before the limit check fires.
  WideInt total = 0;
  auto accumulate = [&](WideInt value) {
    const WideInt magnitude = Abs(value);
    if (magnitude >= kWideMagnitudeLimit ||
        total >= kWideMagnitudeLimit - magnitude) {
      throw CapacityError(
          "instance magnitude sum(|a_i|) + |b| exceeds the 2^125 capacity");
    }
    total += magnitude;
  };
  for (WideInt w : weights_) accumulate(w);
  accumulate(target_);
}

Instance Instance::Prefix(int length, WideInt target) const {
  if (length < 1 || length > n()) {
    throw UsageError("prefix length out of range");
  }
  return Instance(
      std::vector<WideInt>(weights_.begin(), weights_.begin() + length),
      target);
}

WideInt Instance::AbsoluteWeightSum() const {
  WideInt total = 0;
  for (WideInt w : weights_) total += Abs(w);
  return total;
}

Certificate::Certificate(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (std::uint8_t bit : bits_) {
    if (bit > 1) throw UsageError("certificate entries must be 0 or 1");
  }
}

Certificate Certificate::Extended(bool last) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.push_back(last ? 1 : 0);
  return Certificate(std::move(bits));
}

std::string Certificate::ToString() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t bit : bits_) out.push_back(bit ? '1' : '0');
  return out;
}

WideInt Dot(std::span<const WideInt> weights,
            std::span<const std::uint8_t> selection) {
  if (weights.size() != selection.size()) {
    throw UsageError("dot: weight and selection lengths differ (" +
                     std::to_string(weights.size()) + " vs " +
                     std::to_string(selection.size()) + ")");
  }
  WideInt sum = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (selection[i]) sum = CheckedAdd(sum, weights[i]);
  }
  return sum;
}

bool Verify(const Instance& instance, const Certificate& certificate) {
  if (certificate.size() != instance.n()) {
    throw UsageError("verify: certificate length " +
                     std::to_string(certificate.size()) +
                     " does not match n = " + std::to_string(instance.n()));
  }
  return Dot(instance.a(), certificate.bits()) == instance.b();
}

}  // namespace subsetsum
