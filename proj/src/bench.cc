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

#include "subsetsum/bench.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace subsetsum {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename T>
T ParseNumber(std::string_view text, int line, int column) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, column,
                     "malformed number '" + std::string(text) + "'");
  }
  return value;
}

BenchRecord ParseCsvRow(std::string_view row, int line) {
  std::vector<std::string_view> fields;
  std::vector<int> columns;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = row.find(',', pos);
    columns.push_back(static_cast<int>(pos) + 1);
    fields.push_back(row.substr(
        pos, comma == std::string_view::npos ? row.npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (fields.size() != 9) {
    throw ParseError(line, 1,
                     "expected 9 fields, found " +
                         std::to_string(fields.size()));
  }
  BenchRecord r;
  r.algorithm = std::string(fields[0]);
  r.n = ParseNumber<int>(fields[1], line, columns[1]);
  r.seed = ParseNumber<std::uint64_t>(fields[2], line, columns[2]);
  r.family = std::string(fields[3]);
  if (fields[4] == "true") {
    r.solvable = true;
  } else if (fields[4] != "false") {
    throw ParseError(line, columns[4], "solvable must be true or false");
  }
  r.elements_sorted = ParseNumber<std::uint64_t>(fields[5], line, columns[5]);
  r.elements_scanned = ParseNumber<std::uint64_t>(fields[6], line, columns[6]);
  r.comparisons = ParseNumber<std::uint64_t>(fields[7], line, columns[7]);
  r.wall_nanos = ParseNumber<std::int64_t>(fields[8], line, columns[8]);
  return r;
}

BenchRecord ParseJsonRow(std::string_view row, int line) {
  try {
    const auto doc = nlohmann::json::parse(row);
    BenchRecord r;
    r.algorithm = doc.at("algorithm").get<std::string>();
    r.n = doc.at("n").get<int>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.family = doc.at("family").get<std::string>();
    r.solvable = doc.at("solvable").get<bool>();
    r.elements_sorted = doc.at("elements_sorted").get<std::uint64_t>();
    r.elements_scanned = doc.at("elements_scanned").get<std::uint64_t>();
    r.comparisons = doc.at("comparisons").get<std::uint64_t>();
    r.wall_nanos = doc.at("wall_nanos").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line, 1, std::string("bad report record: ") + e.what());
  }
}

std::string ToJsonLine(const BenchRecord& r) {
  nlohmann::ordered_json doc;
  doc["algorithm"] = r.algorithm;
  doc["n"] = r.n;
  doc["seed"] = r.seed;
  doc["family"] = r.family;
  doc["solvable"] = r.solvable;
  doc["elements_sorted"] = r.elements_sorted;
  doc["elements_scanned"] = r.elements_scanned;
  doc["comparisons"] = r.comparisons;
  doc["wall_nanos"] = r.wall_nanos;
  return doc.dump();
}

BenchRecord MakeRecord(Algorithm algorithm, const GenSpec& spec,
                       const SolveReport& report) {
  BenchRecord r;
  r.algorithm = std::string(AlgorithmLabel(algorithm));
  r.n = spec.n;
  r.seed = spec.seed;
  r.family = std::string(FamilyLabel(spec.family));
  r.solvable = report.verdict.solvable;
  r.elements_sorted = report.cost.elements_sorted;
  r.elements_scanned = report.cost.elements_scanned;
  r.comparisons = report.cost.comparisons;
  r.wall_nanos = report.cost.wall_nanos;
  return r;
}

PairSolve RunPair(PairStrategy strategy, const Instance& instance,
                  const SolverLimits& limits) {
  switch (strategy) {
    case PairStrategy::kIndependent:
      return SolvePairIndependent(instance, limits);
    case PairStrategy::kSharedSort:
      return SolvePairSharedSort(instance, limits);
    case PairStrategy::kMerged:
      return SolvePairMerged(instance, limits);
  }
  throw UsageError("unknown pair strategy");
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view label) {
  if (label == "csv") return ReportFormat::kCsv;
  if (label == "jsonl" || label == "json") return ReportFormat::kJsonLines;
  return std::nullopt;
}

void WriteReport(std::span<const BenchRecord> records, ReportFormat format,
                 std::ostream& sink) {
  if (format == ReportFormat::kJsonLines) {
    for (const BenchRecord& r : records) sink << ToJsonLine(r) << '\n';
    return;
  }
  sink << kReportHeader << '\n';
  for (const BenchRecord& r : records) {
    sink << r.algorithm << ',' << r.n << ',' << r.seed << ',' << r.family
         << ',' << (r.solvable ? "true" : "false") << ',' << r.elements_sorted
         << ',' << r.elements_scanned << ',' << r.comparisons << ','
         << r.wall_nanos << '\n';
  }
}

std::vector<BenchRecord> ReadReport(std::istream& source) {
  std::vector<BenchRecord> records;
  std::string line;
  int number = 0;
  bool json = false;
  while (std::getline(source, line)) {
    ++number;
    if (number == 1) {
      json = !line.empty() && line.front() == '{';
      if (!json) {
        if (line != kReportHeader) {
          throw ParseError(1, 1, "report header does not match");
        }
        continue;
      }
    }
    if (line.empty()) continue;
    records.push_back(json ? ParseJsonRow(line, number)
                           : ParseCsvRow(line, number));
  }
  return records;
}

std::uint64_t DeriveSeed(std::uint64_t base, int n, int rep) {
  const std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) |
                            static_cast<std::uint32_t>(rep);
  return SplitMix64(base ^ SplitMix64(key));
}

std::vector<BenchRecord> RunSweep(const SweepConfig& config) {
  if (config.n_min < 1 || config.n_max < config.n_min || config.n_step < 1 ||
      config.reps < 1) {
    throw UsageError("sweep needs 1 <= n_min <= n_max, step >= 1, reps >= 1");
  }
  std::vector<BenchRecord> records;
  for (int n = config.n_min; n <= config.n_max; n += config.n_step) {
    for (int rep = 0; rep < config.reps; ++rep) {
      const GenSpec spec{n, config.family, DeriveSeed(config.seed, n, rep),
                         std::nullopt};
      const Instance instance = Generate(spec);
      for (Algorithm algorithm : config.algorithms) {
        if (IsPairAlgorithm(algorithm) && n < 2) continue;
        records.push_back(MakeRecord(
            algorithm, spec, Solve(instance, algorithm, config.limits)));
      }
    }
  }
  return records;
}

std::optional<CountField> ParseCountField(std::string_view label) {
  if (label == "elements_sorted") return CountField::kElementsSorted;
  if (label == "elements_scanned") return CountField::kElementsScanned;
  if (label == "comparisons") return CountField::kComparisons;
  if (label == "wall_nanos") return CountField::kWallNanos;
  return std::nullopt;
}

double CountOf(const BenchRecord& record, CountField field) {
  switch (field) {
    case CountField::kElementsSorted:
      return static_cast<double>(record.elements_sorted);
    case CountField::kElementsScanned:
      return static_cast<double>(record.elements_scanned);
    case CountField::kComparisons:
      return static_cast<double>(record.comparisons);
    case CountField::kWallNanos:
      return static_cast<double>(record.wall_nanos);
  }
  return 0;
}

FitResult FitExponent(std::span<const std::pair<int, double>> points) {
  std::set<int> distinct;
  for (const auto& [n, count] : points) {
    if (!(count > 0)) {
      throw UsageError("exponent fit needs positive counts");
    }
    distinct.insert(n);
  }
  if (distinct.size() < 3) {
    throw UsageError("exponent fit needs at least 3 distinct n values, got " +
                     std::to_string(distinct.size()));
  }
  const double m = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& [n, count] : points) {
    sx += n;
    sy += std::log2(count);
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [n, count] : points) {
    const double dx = n - mx;
    const double dy = std::log2(count) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double residual = 0;
  for (const auto& [n, count] : points) {
    const double e = std::log2(count) - (fit.intercept + fit.slope * n);
    residual += e * e;
  }
  fit.r_squared = syy > 0 ? 1.0 - residual / syy : 1.0;
  fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
  fit.n_min = *distinct.begin();
  fit.n_max = *distinct.rbegin();
  fit.points = points.size();
  return fit;
}

std::optional<Reduce> ParseReduce(std::string_view label) {
  if (label == "all") return Reduce::kAll;
  if (label == "min") return Reduce::kMin;
  if (label == "mean") return Reduce::kMean;
  return std::nullopt;
}

FitResult FitExponent(std::span<const BenchRecord> records,
                      std::string_view algorithm, CountField field,
                      Reduce reduce) {
  std::vector<std::pair<int, double>> points;
  std::map<int, std::vector<double>> by_n;
  for (const BenchRecord& r : records) {
    if (r.algorithm != algorithm) continue;
    by_n[r.n].push_back(CountOf(r, field));
  }
  for (const auto& [n, counts] : by_n) {
    switch (reduce) {
      case Reduce::kAll:
        for (double c : counts) points.emplace_back(n, c);
        break;
      case Reduce::kMin:
        points.emplace_back(n, *std::min_element(counts.begin(), counts.end()));
        break;
      case Reduce::kMean: {
        double total = 0;
        for (double c : counts) total += c;
        points.emplace_back(n, total / static_cast<double>(counts.size()));
        break;
      }
    }
  }
  return FitExponent(points);
}

std::vector<CompareRow> CompareStrategies(const CompareConfig& config) {
  if (config.reps < 1) throw UsageError("compare needs reps >= 1");
  static constexpr PairStrategy kStrategies[] = {
      PairStrategy::kIndependent, PairStrategy::kSharedSort,
      PairStrategy::kMerged};
  std::vector<CompareRow> rows;
  for (int n : config.n_values) {
    CompareRow row;
    row.n = n;
    for (PairStrategy strategy : kStrategies) {
      StrategyRow s;
      s.n = n;
      s.strategy = strategy;
      s.analytic = AnalyticCost(strategy, n);
      s.sort_matches_model = true;
      s.scan_within_model = true;
      s.elements_sorted_min = s.elements_scanned_min = UINT64_MAX;
      for (int rep = 0; rep < config.reps; ++rep) {
        const GenSpec spec{n + 1, config.family,
                           DeriveSeed(config.seed, n + 1, rep), std::nullopt};
        const StrategyCost cost =
            RunPair(strategy, Generate(spec), config.limits).report.cost;
        s.elements_sorted_min = std::min(s.elements_sorted_min,
                                         cost.elements_sorted);
        s.elements_sorted_max = std::max(s.elements_sorted_max,
                                         cost.elements_sorted);
        s.elements_scanned_min = std::min(s.elements_scanned_min,
                                          cost.elements_scanned);
        s.elements_scanned_max = std::max(s.elements_scanned_max,
                                          cost.elements_scanned);
        s.comparisons_mean += static_cast<double>(cost.comparisons);
        s.wall_nanos_mean += static_cast<double>(cost.wall_nanos);
        s.sort_matches_model &=
            cost.elements_sorted == s.analytic.sort_elements;
        s.scan_within_model &=
            cost.elements_scanned <= s.analytic.scan_elements;
      }
      s.comparisons_mean /= config.reps;
      s.wall_nanos_mean /= config.reps;
      row.strategies.push_back(s);
    }
    const Rational independent = row.strategies[0].analytic.total_units;
    const Rational shared = row.strategies[1].analytic.total_units;
    const Rational merged = row.strategies[2].analytic.total_units;
    if (n % 2 == 1) {
      row.ratio_check = independent == Rational::Of(12) &&
                        shared == Rational::Of(9) && merged == Rational::Of(8);
    } else {
      row.ratio_check = shared == merged && shared < independent;
    }
    row.counters_check = true;
    for (const StrategyRow& s : row.strategies) {
      row.counters_check &= s.sort_matches_model && s.scan_within_model;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

DifferentialReport RunDifferential(int trials, int n_min, int n_max,
                                   std::uint64_t seed,
                                   const SolverLimits& limits) {
  if (trials < 0 || n_min < 1 || n_max < n_min) {
    throw UsageError("differential run needs trials >= 0, 1 <= n_min <= n_max");
  }
  DifferentialReport out;
  const int span = n_max - n_min + 1;
  for (int t = 0; t < trials; ++t) {
    const int n = n_min + t % span;
    const GenSpec spec{n, t % 2 == 0 ? Family::kRestrictedUniform
                                     : Family::kPlanted,
                       DeriveSeed(seed, n, t), std::nullopt};
    const Instance instance = Generate(spec);
    ++out.trials;

    auto flag = [&](const std::string& detail) {
      out.disagreements.push_back({spec, detail});
    };
    auto check_certificate = [&](const SolveReport& report) {
      if (report.verdict.solvable &&
          !Verify(instance, *report.verdict.certificate)) {
        flag(std::string(AlgorithmLabel(report.algorithm)) +
             " certificate fails verify");
      }
    };

    const SolveReport reference = MeetInMiddle(instance, limits);
    check_certificate(reference);
    if (n <= limits.max_brute_dimension) {
      const SolveReport brute = BruteForce(instance, limits);
      check_certificate(brute);
      if (brute.verdict.solvable != reference.verdict.solvable) {
        flag("brute and mitm disagree");
      }
    }
    if (n >= 2) {
      for (PairStrategy strategy :
           {PairStrategy::kIndependent, PairStrategy::kSharedSort,
            PairStrategy::kMerged}) {
        const PairSolve pair = RunPair(strategy, instance, limits);
        check_certificate(pair.report);
        if (pair.pair.combined != reference.verdict.solvable ||
            pair.report.verdict.solvable != reference.verdict.solvable) {
          flag(std::string(PairStrategyLabel(strategy)) +
               " disagrees with mitm");
        }
      }
    }
  }
  return out;
}

}  // namespace subsetsum
