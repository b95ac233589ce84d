// Copyright 2026 The modspace Authors
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
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "modspace/builders.hpp"
#include "modspace/cli.hpp"
#include "modspace/gauges.hpp"
#include "modspace/kolmogorov_riesz.hpp"
#include "modspace/orlicz.hpp"
#include "modspace/topology.hpp"

namespace py = pybind11;
using namespace modspace;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const SquareMatrix& m) {
  Rows out(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

PointSpace space_from(const Rows& distance) {
  return PointSpace(default_labels(distance.size()), SquareMatrix::from_rows(distance));
}

Rows scaled_gauge(const Rows& distance, double p, const std::string& kind) {
  const auto w = from_scaled_metric(space_from(distance), power_scale(p));
  return to_rows(gauge_matrix(w, gauge_kind_from_string(kind)).matrix.values);
}

Rows lp_distances(const Rows& family, const std::vector<double>& masses, double p) {
  const orlicz::OrliczModular rho(orlicz::lp(p), orlicz::DiscreteMeasureSpace(masses));
  return to_rows(orlicz::dstar_matrix(orlicz::FunctionFamily::from_rows(family), rho).values);
}

py::tuple adequacy(const Rows& distance, const std::vector<std::size_t>& anchors) {
  const auto r = adequacy_defect({SquareMatrix::from_rows(distance), "d", 0.0}, anchors);
  return py::make_tuple(r.defect, r.x1, r.x2);
}

Rows fuzzy(const Rows& distance, double t) {
  return to_rows(fuzzy_from_metric({SquareMatrix::from_rows(distance), "d", 0.0}, t));
}

py::tuple run_experiment(const std::string& config_json, const std::filesystem::path& base_dir,
                         std::uint64_t seed) {
  const auto out = cli::run_experiment(io::ordered_json::parse(config_json), base_dir, seed);
  return py::make_tuple(cli::exit_code(out.verdict), out.report.dump(2));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gauges, uniformities and compactness diagnostics for modular spaces.";

  py::register_exception<io::SchemaError>(m, "SchemaError", PyExc_ValueError);

  m.def("scaled_gauge", &scaled_gauge, py::arg("distance"), py::arg("p"), py::arg("kind") = "d0",
        "Gauge matrix (d0 or dstar) of the modular d(x, y) / lambda^p.");
  m.def("lp_distances", &lp_distances, py::arg("family"), py::arg("masses"), py::arg("p"),
        "Pairwise dstar distances of a function family under rho(u) = sum |u|^p mass.");
  m.def("adequacy_defect", &adequacy, py::arg("distance"), py::arg("anchors"),
        "Returns (defect, x1, x2) for the given anchor set.");
  m.def("fuzzy_matrix", &fuzzy, py::arg("distance"), py::arg("t"), "t / (t + d) entrywise.");
  m.def("run_experiment", &run_experiment, py::arg("config_json"), py::arg("base_dir") = ".",
        py::arg("seed") = 0, "Runs a CLI experiment config; returns (exit_code, report_json).");
  m.def("experiment_kinds", &cli::experiment_kinds);
}
