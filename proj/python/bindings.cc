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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsetsum/bench.h"
#include "subsetsum/core.h"
#include "subsetsum/costmodel.h"
#include "subsetsum/instances.h"
#include "subsetsum/solvers.h"

namespace py = pybind11;

namespace subsetsum {
namespace {

// Python ints cross the boundary as decimal strings.
WideInt ToWide(const py::int_& value) {
  const std::string text = py::str(value);
  const std::optional<WideInt> parsed = ParseWideInt(text);
  if (!parsed) throw CapacityError("integer does not fit in 128 bits: " + text);
  return *parsed;
}

py::int_ ToPy(WideInt value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(ToString(value).c_str(), nullptr, 10));
}

std::vector<WideInt> ToWideList(const std::vector<py::int_>& values) {
  std::vector<WideInt> out;
  out.reserve(values.size());
  for (const py::int_& v : values) out.push_back(ToWide(v));
  return out;
}

py::list ToPyList(std::span<const WideInt> values) {
  py::list out;
  for (WideInt v : values) out.append(ToPy(v));
  return out;
}

Algorithm AlgorithmFrom(const std::string& label) {
  const auto algorithm = ParseAlgorithm(label);
  if (!algorithm) throw UsageError("unknown algorithm: " + label);
  return *algorithm;
}

PairStrategy StrategyFrom(const std::string& label) {
  for (PairStrategy s : {PairStrategy::kIndependent, PairStrategy::kSharedSort,
                         PairStrategy::kMerged}) {
    if (PairStrategyLabel(s) == label) return s;
  }
  throw UsageError("unknown strategy: " + label);
}

py::object FractionOf(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.num, r.den);
}

py::object CertificateOf(const Verdict& verdict) {
  if (!verdict.certificate) return py::none();
  const auto bits = verdict.certificate->bits();
  return py::cast(std::vector<int>(bits.begin(), bits.end()));
}

py::dict BreakdownDict(const CostBreakdown& c) {
  py::dict d;
  d["sort_units"] = FractionOf(c.sort_units);
  d["scan_units"] = FractionOf(c.scan_units);
  d["total_units"] = FractionOf(c.total_units);
  d["unit_elements"] = c.unit_elements;
  d["sort_elements"] = c.sort_elements;
  d["scan_elements"] = c.scan_elements;
  return d;
}

py::dict ReportDict(const SolveReport& report) {
  py::dict d;
  d["solvable"] = report.verdict.solvable;
  d["certificate"] = CertificateOf(report.verdict);
  d["algorithm"] = std::string(AlgorithmLabel(report.algorithm));
  d["elements_sorted"] = report.cost.elements_sorted;
  d["elements_scanned"] = report.cost.elements_scanned;
  d["comparisons"] = report.cost.comparisons;
  d["wall_nanos"] = report.cost.wall_nanos;
  d["analytic"] = report.cost.analytic ? py::object(BreakdownDict(*report.cost.analytic))
                                       : py::none();
  return d;
}

py::object SubVerdict(const std::optional<Verdict>& verdict) {
  if (!verdict) return py::none();
  py::dict d;
  d["solvable"] = verdict->solvable;
  d["certificate"] = CertificateOf(*verdict);
  return d;
}

SolverLimits LimitsOf(int max_brute_dimension, int max_half_width) {
  SolverLimits limits;
  limits.max_brute_dimension = max_brute_dimension;
  limits.max_half_width = max_half_width;
  return limits;
}

}  // namespace
}  // namespace subsetsum

PYBIND11_MODULE(_core, m) {
  using namespace subsetsum;
  m.doc() = "Subset-sum solvers with element-count instrumentation.";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  const SolverLimits defaults;

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::vector<py::int_>& a, const py::int_& b) {
             return Instance(ToWideList(a), ToWide(b));
           }),
           py::arg("a"), py::arg("b"))
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("a", [](const Instance& i) { return ToPyList(i.a()); })
      .def_property_readonly("b", [](const Instance& i) { return ToPy(i.b()); })
      .def("to_text", [](const Instance& i) { return WriteInstanceText(i); })
      .def("to_json", [](const Instance& i) { return WriteInstanceJson(i); })
      .def("__eq__", [](const Instance& x, const Instance& y) { return x == y; })
      .def("__repr__", [](const Instance& i) {
        std::string out = "Instance(a=[";
        for (int k = 0; k < i.n(); ++k) {
          if (k) out += ", ";
          out += ToString(i.a(k));
        }
        return out + "], b=" + ToString(i.b()) + ")";
      });

  m.def("read_text", [](const std::string& text) { return ReadInstanceText(text); },
        py::arg("text"));
  m.def("read_json", [](const std::string& text) { return ReadInstanceJson(text); },
        py::arg("text"));

  m.def("verify",
        [](const Instance& instance, const std::vector<int>& x) {
          std::vector<std::uint8_t> bits;
          for (int v : x) {
            if (v != 0 && v != 1) throw UsageError("certificate entries must be 0 or 1");
            bits.push_back(static_cast<std::uint8_t>(v));
          }
          return Verify(instance, Certificate(std::move(bits)));
        },
        py::arg("instance"), py::arg("x"));

  m.def("solve",
        [](const Instance& instance, const std::string& algorithm,
           int max_brute_dimension, int max_half_width) {
          return ReportDict(Solve(instance, AlgorithmFrom(algorithm),
                                  LimitsOf(max_brute_dimension, max_half_width)));
        },
        py::arg("instance"), py::arg("algorithm") = "mitm",
        py::arg("max_brute_dimension") = defaults.max_brute_dimension,
        py::arg("max_half_width") = defaults.max_half_width);

  m.def("solve_pair",
        [](const Instance& instance, const std::string& strategy, int max_half_width) {
          const SolverLimits limits = LimitsOf(SolverLimits{}.max_brute_dimension,
                                               max_half_width);
          PairSolve run;
          switch (StrategyFrom(strategy)) {
            case PairStrategy::kIndependent: run = SolvePairIndependent(instance, limits); break;
            case PairStrategy::kSharedSort: run = SolvePairSharedSort(instance, limits); break;
            case PairStrategy::kMerged: run = SolvePairMerged(instance, limits); break;
          }
          py::dict d = ReportDict(run.report);
          d["base"] = SubVerdict(run.pair.base);
          d["shifted"] = SubVerdict(run.pair.shifted);
          return d;
        },
        py::arg("instance"), py::arg("strategy") = "merged",
        py::arg("max_half_width") = defaults.max_half_width);

  m.def("analytic_cost",
        [](const std::string& strategy, int n) {
          return BreakdownDict(AnalyticCost(StrategyFrom(strategy), n));
        },
        py::arg("strategy"), py::arg("n"));

  m.def("generate",
        [](int n, const std::string& family, std::uint64_t seed,
           std::optional<bool> solvable) {
          const auto f = ParseFamily(family);
          if (!f) throw UsageError("unknown family: " + family);
          const GeneratedInstance g = GenerateWithWitness({n, *f, seed, solvable});
          py::object witness = py::none();
          if (g.witness) {
            const auto bits = g.witness->bits();
            witness = py::cast(std::vector<int>(bits.begin(), bits.end()));
          }
          return py::make_tuple(g.instance, witness);
        },
        py::arg("n"), py::arg("family") = "restricted_uniform", py::arg("seed") = 0,
        py::arg("solvable") = py::none(),
        "Returns (instance, witness or None).");

  m.def("fit_exponent",
        [](const std::vector<std::pair<int, double>>& points) {
          const FitResult fit = FitExponent(points);
          py::dict d;
          d["slope"] = fit.slope;
          d["intercept"] = fit.intercept;
          d["r_squared"] = fit.r_squared;
          d["n_min"] = fit.n_min;
          d["n_max"] = fit.n_max;
          d["points"] = fit.points;
          return d;
        },
        py::arg("points"), "Least-squares slope of log2(count) against n.");
}
