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

#include "subsetsum/instances.h"

#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace subsetsum {
namespace {

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, range), range >= 1.
  std::uint64_t Below(std::uint64_t range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (true) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % range;
    }
  }

  // Uniform on [lo, hi]; hi - lo must be below 2^64 - 1.
  WideInt Between(WideInt lo, WideInt hi) {
    const WideInt span = hi - lo + 1;
    if (span <= 0 ||
        span > static_cast<WideInt>(std::numeric_limits<std::uint64_t>::max())) {
      throw CapacityError("draw range exceeds 64 bits");
    }
    return lo + static_cast<WideInt>(Below(static_cast<std::uint64_t>(span)));
  }

  bool Bit() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Draw order: a_1 .. a_n, each uniform on (-2^n, 2^n).
std::vector<WideInt> RestrictedWeights(int n, Draws& draws) {
  const WideInt bound = Pow2(n) - 1;
  std::vector<WideInt> a(n);
  for (WideInt& w : a) w = draws.Between(-bound, bound);
  return a;
}

WideInt TargetBound(int n) { return static_cast<WideInt>(n) * Pow2(n) - 1; }

std::vector<std::uint8_t> BinaryDigits(WideInt value, int n) {
  std::vector<std::uint8_t> bits(n);
  for (int i = 0; i < n; ++i) bits[i] = (value >> i) & 1;
  return bits;
}

GeneratedInstance RestrictedUniform(int n, Draws& draws) {
  std::vector<WideInt> a = RestrictedWeights(n, draws);
  const WideInt b = draws.Between(-TargetBound(n), TargetBound(n));
  return {Instance(std::move(a), b), std::nullopt};
}

// Draw order: weights, then x*_1 .. x*_n.
GeneratedInstance Planted(int n, Draws& draws) {
  std::vector<WideInt> a = RestrictedWeights(n, draws);
  std::vector<std::uint8_t> x(n);
  for (auto& bit : x) bit = draws.Bit() ? 1 : 0;
  const WideInt b = Dot(a, x);
  return {Instance(std::move(a), b), Certificate(std::move(x))};
}

// a_i = 2^(i-1), so S is exactly [0, 2^n - 1] with 2^n distinct sums.
GeneratedInstance DistinctSums(int n, std::optional<bool> hint, Draws& draws) {
  std::vector<WideInt> a(n);
  for (int i = 0; i < n; ++i) a[i] = Pow2(i);
  const WideInt top = Pow2(n) - 1;
  WideInt b;
  if (!hint.has_value()) {
    b = draws.Between(-TargetBound(n), TargetBound(n));
  } else if (*hint) {
    b = draws.Between(0, top);
  } else {
    // Restricted targets outside [0, 2^n - 1]: first the negatives
    // -1 .. -(n 2^n - 1), then 2^n .. n 2^n - 1.
    const WideInt negatives = TargetBound(n);
    const WideInt count = 2 * TargetBound(n) + 1 - Pow2(n);
    const WideInt r = draws.Between(0, count - 1);
    b = r < negatives ? -1 - r : Pow2(n) + (r - negatives);
  }
  std::optional<Certificate> witness;
  if (b >= 0 && b <= top) witness = Certificate(BinaryDigits(b, n));
  return {Instance(std::move(a), b), std::move(witness)};
}

// Even weights, odd target next to the midpoint of S so b - S- and S+
// overlap and the scan interleaves before one list runs out.
// Draw order: a_1 .. a_n (each 2 * uniform on (-2^(n-1), 2^(n-1))), then one
// bit choosing b's rounding direction when sum(a)/2 is even.
GeneratedInstance ParityBlocked(int n, Draws& draws) {
  const WideInt bound = Pow2(n - 1) - 1;
  std::vector<WideInt> a(n);
  WideInt total = 0;
  for (WideInt& w : a) {
    w = 2 * draws.Between(-bound, bound);
    total += w;
  }
  const WideInt half = total / 2;
  const bool up = draws.Bit();
  const WideInt b = (half % 2 != 0) ? half : (up ? half + 1 : half - 1);
  return {Instance(std::move(a), b), std::nullopt};
}

// Binary-ladder weights that make b - S- and S+ alternate value by value,
// for the plain split and for the (n-1)-prefix split used by the pair
// strategies. With p = n - 1, h = ceil(p/2), l = p - h, r = 2^(h-l) and an
// odd scale k:
//   a_1..a_h       = 2k * 2^(i-1)      (S+ = 2k * {0, 1, .., 2^h - 1})
//   a_(h+1)..a_p   = 2kr * 2^(j-1)     (S- = 2kr * {0, 1, .., 2^l - 1})
//   a_n            = 2k
//   b              = k * (2^(h+1) - 1)
// All weights are even and b is odd. Draw order: k only.
GeneratedInstance ScanAdversarial(int n, Draws& draws) {
  if (n == 1) return {Instance({0}, 1), std::nullopt};
  const int p = n - 1;
  const int h = (p + 1) / 2;
  const int l = p - h;
  const WideInt ratio = Pow2(h - l);
  // k odd and k * 2^h < 2^n.
  const WideInt k = 2 * draws.Between(0, Pow2(n - h - 1) - 1) + 1;
  std::vector<WideInt> a;
  a.reserve(n);
  for (int i = 0; i < h; ++i) a.push_back(2 * k * Pow2(i));
  for (int j = 0; j < l; ++j) a.push_back(2 * k * ratio * Pow2(j));
  a.push_back(2 * k);
  const WideInt b = k * (Pow2(h + 1) - 1);
  return {Instance(std::move(a), b), std::nullopt};
}

int LineColumnFromOffset(std::string_view text, std::size_t offset,
                         int* column) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  *column = col;
  return line;
}

// Syntax check for one canonical integer token; capacity is checked apart so
// overflow reports a CapacityError rather than a ParseError.
WideInt ParseToken(std::string_view token, int line, int column,
                   std::string_view what) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  if (!ok || (digits.size() > 1 && digits.front() == '0') ||
      token == "-0") {
    throw ParseError(line, column,
                     "malformed " + std::string(what) + " '" +
                         std::string(token) + "'");
  }
  const std::optional<WideInt> value = ParseWideInt(token);
  if (!value) {
    throw CapacityError("line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + std::string(what) +
                        " does not fit in 128 bits");
  }
  return *value;
}

nlohmann::ordered_json JsonInteger(WideInt value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return ToString(value);
}

WideInt IntegerFromJson(const nlohmann::json& node, std::string_view what) {
  if (node.is_number_integer()) {
    if (node.is_number_unsigned()) {
      return static_cast<WideInt>(node.get<std::uint64_t>());
    }
    return static_cast<WideInt>(node.get<std::int64_t>());
  }
  if (node.is_string()) {
    const auto& text = node.get_ref<const std::string&>();
    return ParseToken(text, 1, 1, what);
  }
  throw ParseError(1, 1, std::string(what) + " must be an integer");
}

}  // namespace

std::string_view FamilyLabel(Family family) {
  switch (family) {
    case Family::kRestrictedUniform:
      return "restricted_uniform";
    case Family::kPlanted:
      return "planted";
    case Family::kDistinctSums:
      return "distinct_sums";
    case Family::kParityBlocked:
      return "parity_blocked";
    case Family::kScanAdversarial:
      return "scan_adversarial";
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view label) {
  for (Family f : {Family::kRestrictedUniform, Family::kPlanted,
                   Family::kDistinctSums, Family::kParityBlocked,
                   Family::kScanAdversarial}) {
    if (FamilyLabel(f) == label) return f;
  }
  return std::nullopt;
}

GeneratedInstance GenerateWithWitness(const GenSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxGenDimension) {
    throw CapacityError("generator dimension must lie in [1, " +
                        std::to_string(kMaxGenDimension) + "], got " +
                        std::to_string(spec.n));
  }
  Draws draws(spec.seed);
  switch (spec.family) {
    case Family::kRestrictedUniform:
      return RestrictedUniform(spec.n, draws);
    case Family::kPlanted:
      return Planted(spec.n, draws);
    case Family::kDistinctSums:
      return DistinctSums(spec.n, spec.solvable_hint, draws);
    case Family::kParityBlocked:
      return ParityBlocked(spec.n, draws);
    case Family::kScanAdversarial:
      return ScanAdversarial(spec.n, draws);
  }
  throw UsageError("unknown family");
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string WriteInstanceText(const Instance& instance) {
  std::string out = std::to_string(instance.n());
  out.push_back('\n');
  for (int i = 0; i < instance.n(); ++i) {
    if (i > 0) out.push_back(' ');
    out += ToString(instance.a(i));
  }
  out.push_back('\n');
  out += ToString(instance.b());
  out.push_back('\n');
  return out;
}

void WriteInstanceText(const Instance& instance, std::ostream& sink) {
  sink << WriteInstanceText(instance);
}

Instance ReadInstanceText(std::string_view text) {
  // Split into exactly three newline-terminated lines.
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) {
      const int line = static_cast<int>(lines.size()) + 1;
      throw ParseError(line, static_cast<int>(text.size() - start) + 1,
                       "missing trailing newline");
    }
    lines.push_back(text.substr(start, stop - start));
    start = stop + 1;
  }
  if (lines.size() < 3) {
    const int line = static_cast<int>(lines.size()) + 1;
    static constexpr std::string_view kExpected[] = {"dimension n", "weights",
                                                     "target b"};
    throw ParseError(line, 1,
                     "unexpected end of input, expected " +
                         std::string(kExpected[lines.size()]));
  }
  if (lines.size() > 3) {
    throw ParseError(4, 1, "unexpected content after the target line");
  }

  const WideInt n_value = ParseToken(lines[0], 1, 1, "dimension n");
  if (n_value < 1) throw ParseError(1, 1, "dimension n must be positive");
  if (n_value > kMaxDimension) {
    throw CapacityError("dimension " + ToString(n_value) +
                        " exceeds the maximum of " +
                        std::to_string(kMaxDimension));
  }
  const int n = static_cast<int>(n_value);

  std::vector<WideInt> weights;
  const std::string_view row = lines[1];
  std::size_t pos = 0;
  while (true) {
    const std::size_t space = row.find(' ', pos);
    const std::string_view token =
        row.substr(pos, space == std::string_view::npos ? row.npos
                                                        : space - pos);
    const int column = static_cast<int>(pos) + 1;
    if (static_cast<int>(weights.size()) == n) {
      throw ParseError(2, column,
                       "more than n = " + std::to_string(n) + " weights");
    }
    weights.push_back(ParseToken(token, 2, column, "weight"));
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  if (static_cast<int>(weights.size()) != n) {
    throw ParseError(2, static_cast<int>(row.size()) + 1,
                     "expected n = " + std::to_string(n) + " weights, found " +
                         std::to_string(weights.size()));
  }
  const WideInt b = ParseToken(lines[2], 3, 1, "target b");
  return Instance(std::move(weights), b);
}

Instance ReadInstanceText(std::istream& source) {
  const std::string text((std::istreambuf_iterator<char>(source)),
                         std::istreambuf_iterator<char>());
  return ReadInstanceText(text);
}

std::string WriteInstanceJson(const Instance& instance) {
  nlohmann::ordered_json doc;
  doc["n"] = instance.n();
  auto weights = nlohmann::ordered_json::array();
  for (WideInt w : instance.a()) weights.push_back(JsonInteger(w));
  doc["a"] = std::move(weights);
  doc["b"] = JsonInteger(instance.b());
  return doc.dump() + "\n";
}

Instance ReadInstanceJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int column = 1;
    const int line = LineColumnFromOffset(
        text, e.byte > 0 ? e.byte - 1 : 0, &column);
    throw ParseError(line, column, "invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("a") ||
      !doc.contains("b")) {
    throw ParseError(1, 1, "expected an object with fields n, a, b");
  }
  const WideInt n = IntegerFromJson(doc["n"], "dimension n");
  if (!doc["a"].is_array()) throw ParseError(1, 1, "field a must be an array");
  std::vector<WideInt> weights;
  for (const auto& node : doc["a"]) {
    weights.push_back(IntegerFromJson(node, "weight"));
  }
  if (n != static_cast<WideInt>(weights.size())) {
    throw ParseError(1, 1,
                     "field n = " + ToString(n) + " but a holds " +
                         std::to_string(weights.size()) + " weights");
  }
  return Instance(std::move(weights), IntegerFromJson(doc["b"], "target b"));
}

}  // namespace subsetsum
