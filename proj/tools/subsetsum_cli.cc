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

// subsetsum: solve, generate, cross-check and benchmark SUBSET-SUM instances.
//
// Exit status: solve returns 0 for SOLVABLE and 1 for UNSOLVABLE; verify and
// compare return 1 when a check fails. Every command returns 2 on errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subsetsum/bench.h"
#include "subsetsum/core.h"
#include "subsetsum/instances.h"
#include "subsetsum/solvers.h"

namespace {

using namespace subsetsum;

constexpr int kExitError = 2;

std::string ReadSource(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Writes to `path`, or to standard output for "" and "-".
void Emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

Instance ParseInstance(const std::string& text, const std::string& format) {
  const bool json =
      format == "json" || (format == "auto" && !text.empty() && text[0] == '{');
  return json ? ReadInstanceJson(text) : ReadInstanceText(text);
}

Family RequireFamily(const std::string& label) {
  const auto family = ParseFamily(label);
  if (!family) throw UsageError("unknown family '" + label + "'");
  return *family;
}

Algorithm RequireAlgorithm(const std::string& label) {
  const auto algorithm = ParseAlgorithm(label);
  if (!algorithm) throw UsageError("unknown algorithm '" + label + "'");
  return *algorithm;
}

void CheckRange(int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) {
    throw UsageError("need 1 <= --n-min <= --n-max");
  }
}

struct SolveOptions {
  std::string source = "-";
  std::string algo = "mitm";
  std::string format = "auto";
};

int RunSolve(const SolveOptions& opt) {
  const Instance instance = ParseInstance(ReadSource(opt.source), opt.format);
  const SolveReport report = Solve(instance, RequireAlgorithm(opt.algo));
  if (report.verdict.solvable) {
    std::cout << "SOLVABLE x=" << report.verdict.certificate->ToString()
              << '\n';
  } else {
    std::cout << "UNSOLVABLE\n";
  }
  std::cout << "algorithm=" << AlgorithmLabel(report.algorithm) << '\n'
            << "elements_sorted=" << report.cost.elements_sorted << '\n'
            << "elements_scanned=" << report.cost.elements_scanned << '\n'
            << "comparisons=" << report.cost.comparisons << '\n'
            << "wall_nanos=" << report.cost.wall_nanos << '\n';
  if (report.cost.analytic) {
    std::cout << "analytic_units=" << report.cost.analytic->total_units.ToString()
              << '\n';
  }
  return report.verdict.solvable ? 0 : 1;
}

struct GenOptions {
  int n = 8;
  std::string family = "restricted_uniform";
  std::uint64_t seed = 0;
  std::string solvable;
  std::string format = "text";
  std::string out;
};

int RunGen(const GenOptions& opt) {
  GenSpec spec{opt.n, RequireFamily(opt.family), opt.seed, std::nullopt};
  if (opt.solvable == "true") {
    spec.solvable_hint = true;
  } else if (opt.solvable == "false") {
    spec.solvable_hint = false;
  } else if (!opt.solvable.empty()) {
    throw UsageError("--solvable takes true or false");
  }
  const Instance instance = Generate(spec);
  if (opt.format == "text") {
    Emit(opt.out, WriteInstanceText(instance));
  } else if (opt.format == "json") {
    Emit(opt.out, WriteInstanceJson(instance));
  } else {
    throw UsageError("--format takes text or json");
  }
  return 0;
}

struct VerifyOptions {
  int trials = 500;
  int n_min = 1;
  int n_max = 16;
  std::uint64_t seed = 0;
};

int RunVerify(const VerifyOptions& opt) {
  CheckRange(opt.n_min, opt.n_max);
  const DifferentialReport report =
      RunDifferential(opt.trials, opt.n_min, opt.n_max, opt.seed);
  for (const Disagreement& d : report.disagreements) {
    std::cout << "DISAGREE n=" << d.spec.n
              << " family=" << FamilyLabel(d.spec.family)
              << " seed=" << d.spec.seed << " : " << d.detail << '\n';
  }
  std::cout << "trials=" << report.trials
            << " disagreements=" << report.disagreements.size() << '\n';
  return report.disagreements.empty() ? 0 : 1;
}

struct CompareOptions {
  int n_min = 1;
  int n_max = 15;
  std::string parity = "all";
  std::string family = "scan_adversarial";
  std::uint64_t seed = 0;
  int reps = 3;
  std::string out;
};

int RunCompare(const CompareOptions& opt) {
  CheckRange(opt.n_min, opt.n_max);
  CompareConfig config;
  config.family = RequireFamily(opt.family);
  config.seed = opt.seed;
  config.reps = opt.reps;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    const bool odd = n % 2 == 1;
    if ((opt.parity == "odd" && !odd) || (opt.parity == "even" && odd)) {
      continue;
    }
    config.n_values.push_back(n);
  }
  if (opt.parity != "all" && opt.parity != "odd" && opt.parity != "even") {
    throw UsageError("--parity takes odd, even or all");
  }

  const std::vector<CompareRow> rows = CompareStrategies(config);
  std::ostringstream table;
  table << "n,strategy,sort_units,scan_units,total_units,model_sorted,"
           "model_scanned,elements_sorted,elements_scanned_min,"
           "elements_scanned_max,comparisons_mean,wall_nanos_mean,"
           "ratio_check,counters_check\n";
  bool ok = true;
  for (const CompareRow& row : rows) {
    ok = ok && row.ratio_check && row.counters_check;
    for (const StrategyRow& s : row.strategies) {
      table << row.n << ',' << PairStrategyLabel(s.strategy) << ','
            << s.analytic.sort_units.ToString() << ','
            << s.analytic.scan_units.ToString() << ','
            << s.analytic.total_units.ToString() << ','
            << s.analytic.sort_elements << ',' << s.analytic.scan_elements
            << ',' << s.elements_sorted_max << ',' << s.elements_scanned_min
            << ',' << s.elements_scanned_max << ',' << std::fixed
            << std::setprecision(1) << s.comparisons_mean << ','
            << s.wall_nanos_mean << ','
            << (row.ratio_check ? "pass" : "fail") << ','
            << (row.counters_check ? "pass" : "fail") << '\n';
    }
  }
  Emit(opt.out, table.str());
  return ok ? 0 : 1;
}

struct BenchOptions {
  std::string algo = "mitm";
  int n_min = 10;
  int n_max = 20;
  int n_step = 1;
  std::string family = "parity_blocked";
  int reps = 3;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

int RunBench(const BenchOptions& opt) {
  CheckRange(opt.n_min, opt.n_max);
  SweepConfig config;
  std::stringstream labels(opt.algo);
  for (std::string label; std::getline(labels, label, ',');) {
    config.algorithms.push_back(RequireAlgorithm(label));
  }
  config.n_min = opt.n_min;
  config.n_max = opt.n_max;
  config.n_step = opt.n_step;
  config.family = RequireFamily(opt.family);
  config.reps = opt.reps;
  config.seed = opt.seed;
  const auto format = ParseReportFormat(opt.format);
  if (!format) throw UsageError("--format takes csv or jsonl");

  const std::vector<BenchRecord> records = RunSweep(config);
  std::ostringstream report;
  WriteReport(records, *format, report);
  Emit(opt.out, report.str());
  return 0;
}

struct FitOptions {
  std::string source = "-";
  std::string algo = "mitm";
  std::string field = "elements_sorted";
  std::string reduce = "all";
};

int RunFit(const FitOptions& opt) {
  std::istringstream in(ReadSource(opt.source));
  const std::vector<BenchRecord> records = ReadReport(in);
  const auto field = ParseCountField(opt.field);
  if (!field) throw UsageError("unknown count field '" + opt.field + "'");
  const auto reduce = ParseReduce(opt.reduce);
  if (!reduce) throw UsageError("--reduce takes all, min or mean");
  const FitResult fit = FitExponent(records, opt.algo, *field, *reduce);
  std::cout << std::fixed << std::setprecision(6) << "slope=" << fit.slope
            << " intercept=" << fit.intercept
            << " r_squared=" << fit.r_squared << " n_min=" << fit.n_min
            << " n_max=" << fit.n_max << " points=" << fit.points << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Instrumented exact SUBSET-SUM solvers and experiments"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide one instance");
  solve_cmd->add_option("source", solve.source, "Instance file, '-' = stdin");
  solve_cmd->add_option("--algo", solve.algo,
                        "brute, mitm, pair-independent, pair-shared, "
                        "pair-merged")
      ->capture_default_str();
  solve_cmd->add_option("--format", solve.format, "auto, text or json")
      ->capture_default_str();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("--n", gen.n, "Dimension")->capture_default_str();
  gen_cmd->add_option("--family", gen.family,
                      "restricted_uniform, planted, distinct_sums, "
                      "parity_blocked, scan_adversarial")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--solvable", gen.solvable,
                      "distinct_sums target inside (true) or outside (false) "
                      "the sum set");
  gen_cmd->add_option("--format", gen.format, "text or json")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Differential check of all solvers");
  verify_cmd->add_option("--trials", verify.trials)->capture_default_str();
  verify_cmd->add_option("--n-min", verify.n_min)->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max)->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Pair-strategy costs against the unit-cost model");
  compare_cmd->add_option("--n-min", compare.n_min, "Smallest subproblem n")
      ->capture_default_str();
  compare_cmd->add_option("--n-max", compare.n_max, "Largest subproblem n")
      ->capture_default_str();
  compare_cmd->add_option("--parity", compare.parity, "odd, even or all")
      ->capture_default_str();
  compare_cmd->add_option("--family", compare.family)->capture_default_str();
  compare_cmd->add_option("--seed", compare.seed)->capture_default_str();
  compare_cmd->add_option("--reps", compare.reps)->capture_default_str();
  compare_cmd->add_option("--out", compare.out, "Output path");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Seeded scaling sweep");
  bench_cmd->add_option("--algo", bench.algo, "Comma-separated algorithms")
      ->capture_default_str();
  bench_cmd->add_option("--n-min", bench.n_min)->capture_default_str();
  bench_cmd->add_option("--n-max", bench.n_max)->capture_default_str();
  bench_cmd->add_option("--n-step", bench.n_step)->capture_default_str();
  bench_cmd->add_option("--family", bench.family)->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Report path (default stdout)");
  bench_cmd->add_option("--format", bench.format, "csv or jsonl")
      ->capture_default_str();

  FitOptions fit;
  auto* fit_cmd =
      app.add_subcommand("fit", "Fit log2(count) against n from a report");
  fit_cmd->add_option("source", fit.source, "Report file, '-' = stdin");
  fit_cmd->add_option("--algo", fit.algo)->capture_default_str();
  fit_cmd->add_option("--field", fit.field,
                      "elements_sorted, elements_scanned, comparisons, "
                      "wall_nanos")
      ->capture_default_str();
  fit_cmd->add_option("--reduce", fit.reduce, "all, min or mean per n")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*gen_cmd) return RunGen(gen);
    if (*verify_cmd) return RunVerify(verify);
    if (*compare_cmd) return RunCompare(compare);
    if (*bench_cmd) return RunBench(bench);
    if (*fit_cmd) return RunFit(fit);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
