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

#include "subsetsum/wide_int.h"

#include <algorithm>

namespace subsetsum {

WideInt CheckedAdd(WideInt lhs, WideInt rhs) {
  WideInt out;
  if (__builtin_add_overflow(lhs, rhs, &out)) {
    throw CapacityError("128-bit overflow in addition");
  }
  return out;
}

WideInt CheckedSub(WideInt lhs, WideInt rhs) {
  WideInt out;
  if (__builtin_sub_overflow(lhs, rhs, &out)) {
    throw CapacityError("128-bit overflow in subtraction");
  }
  return out;
}

WideInt Abs(WideInt value) {
  if (value < 0) return CheckedSub(0, value);
  return value;
}

std::string ToString(WideInt value) {
  if (value == 0) return "0";
  // Work on the unsigned magnitude so the minimum value is handled.
  using Unsigned = unsigned __int128;
  const bool negative = value < 0;
  Unsigned magnitude = negative ? Unsigned{0} - static_cast<Unsigned>(value)
                                : static_cast<Unsigned>(value);
  std::string digits;
  while (magnitude != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<WideInt> ParseWideInt(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  if (text.size() > 1 && text.front() == '0') return std::nullopt;
  if (negative && text == "0") return std::nullopt;
  WideInt value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    const int digit = c - '0';
    // Accumulate negatively so that the full negative range parses.
    if (__builtin_mul_overflow(value, 10, &value)) return std::nullopt;
    if (__builtin_sub_overflow(value, digit, &value)) return std::nullopt;
  }
  if (!negative) {
    if (__builtin_sub_overflow(static_cast<WideInt>(0), value, &value)) {
      return std::nullopt;
    }
  }
  return value;
}

WideInt Pow2(int exponent) {
  if (exponent < 0 || exponent > 126) {
    throw CapacityError("power of two out of 128-bit range");
  }
  return static_cast<WideInt>(1) << exponent;
}

}  // namespace subsetsum
