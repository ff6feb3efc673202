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

#ifndef SUBSETSUM_WIDE_INT_H_
#define SUBSETSUM_WIDE_INT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subsetsum {

// Signed 128-bit integer used for weights, targets and every partial sum.
using WideInt = __int128;

// Magnitude bound on sum(|a_i|) + |b| accepted for an instance. Keeping it at
// 2^125 leaves room for the difference of any two partial sums.
inline constexpr WideInt kWideMagnitudeLimit = static_cast<WideInt>(1) << 125;

// Raised when a value would leave the representable range, or when a
// configured size limit (dimension, half width) is exceeded.
class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Raised on contract violations by the caller (length mismatch, bad flags).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

WideInt CheckedAdd(WideInt lhs, WideInt rhs);
WideInt CheckedSub(WideInt lhs, WideInt rhs);
WideInt Abs(WideInt value);

// Canonical decimal form: optional '-', no leading zeros, "0" for zero.
std::string ToString(WideInt value);

// Parses the canonical decimal form. Returns nullopt on any deviation
// (leading '+', leading zeros, "-0", empty, non-digit) or on overflow.
std::optional<WideInt> ParseWideInt(std::string_view text);

// Power of two as a WideInt; exponent must be in [0, 126].
WideInt Pow2(int exponent);

}  // namespace subsetsum

#endif  // SUBSETSUM_WIDE_INT_H_
