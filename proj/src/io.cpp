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

#include "modspace/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace modspace::io {
namespace {

const ordered_json& require(const ordered_json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_cell(std::string s, const std::string& path) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  if (s == "inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SchemaError(path, "not a number: '" + s + "'");
  }
}

}  // namespace

ordered_json number(double v) {
  if (std::isinf(v) && v > 0) return "inf";
  return v;
}

double parse_number(const ordered_json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  throw SchemaError(path, "expected a number or \"inf\"");
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

ordered_json read_json(const std::filesystem::path& p) {
  const std::string text = read_text(p);
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw SchemaError(p.string(), std::string("invalid JSON: ") + e.what());
  }
}

PointSpace point_space_from_json(const ordered_json& j, const std::string& path,
                                 TriangleCheck triangle) {
  const auto& rows = require(j, "distance", path);
  if (!rows.is_array() || rows.empty()) throw SchemaError(path + ".distance", "expected a nonempty array");
  const std::size_t n = rows.size();
  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rp = path + ".distance[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw SchemaError(rp, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) {
      d(i, k) = parse_number(rows[i][k], rp + "[" + std::to_string(k) + "]");
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& ls = j["labels"];
    if (!ls.is_array() || ls.size() != n) {
      throw SchemaError(path + ".labels", "expected " + std::to_string(n) + " labels");
    }
    for (const auto& l : ls) {
      if (!l.is_string()) throw SchemaError(path + ".labels", "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    labels = default_labels(n);
  }
  try {
    return PointSpace(std::move(labels), std::move(d), triangle);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + ".distance", e.what());
  }
}

ordered_json to_json(const PointSpace& space) {
  ordered_json j;
  j["labels"] = space.labels();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(number(space.distance(i, k).value()));
    rows.push_back(std::move(row));
  }
  j["distance"] = std::move(rows);
  return j;
}

std::string to_csv(const SquareMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k > 0) out += ',';
      out += format_double(m(i, k));
    }
    out += '\n';
  }
  return out;
}

ordered_json to_json(const DistanceMatrix& d) {
  ordered_json j;
  j["provenance"] = d.provenance;
  j["resolution"] = d.resolution;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < d.size(); ++k) row.push_back(number(d(i, k)));
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  return j;
}

ordered_json to_json(const Witness& w) {
  ordered_json j;
  j["kind"] = w.kind;
  j["points"] = w.points;
  ordered_json values = ordered_json::object();
  for (const auto& [k, v] : w.values) values[k] = number(v);
  j["values"] = std::move(values);
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

ordered_json to_json(const DiagnosticReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["verdict"] = to_string(r.verdict);
  j["summary"] = r.summary;
  ordered_json ws = ordered_json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = std::move(ws);
  ordered_json metrics = ordered_json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = number(v);
  j["metrics"] = std::move(metrics);
  j["notes"] = r.notes;
  return j;
}

ordered_json to_json(const NetCover& net) {
  ordered_json j;
  j["epsilon"] = net.epsilon;
  j["centers"] = net.centers;
  ordered_json a = ordered_json::object();
  for (const auto& [p, c] : net.assignment) a[std::to_string(p)] = c;
  j["assignment"] = std::move(a);
  return j;
}

ordered_json to_json(const RefinementVerdict& v) {
  ordered_json j;
  j["direction"] = to_string(v.direction);
  ordered_json ws = ordered_json::array();
  for (const auto& w : v.witnesses) {
    ws.push_back({{"inclusion", w.inclusion}, {"point", w.point}, {"radius", w.radius}});
  }
  j["witnesses"] = std::move(ws);
  return j;
}

std::string to_csv(const Entourage& v) {
  std::string out = "x,y\n";
  for (std::size_t x = 0; x < v.size(); ++x) {
    for (std::size_t y = 0; y < v.size(); ++y) {
      if (v.contains(x, y)) out += std::to_string(x) + "," + std::to_string(y) + "\n";
    }
  }
  return out;
}

orlicz::FunctionFamily family_from_csv(const std::string& text, const std::string& path) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<double> row;
    const auto cells = split(line, ',');
    for (std::size_t c = 0; c < cells.size(); ++c) {
      row.push_back(parse_cell(cells[c], path + ":" + std::to_string(lineno) + ":" + std::to_string(c + 1)));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw SchemaError(path, "no rows");
  try {
    return orlicz::FunctionFamily::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

std::string to_csv(const orlicz::FunctionFamily& f) {
  std::string out;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      if (c > 0) out += ',';
      out += format_double(f(r, c));
    }
    out += '\n';
  }
  return out;
}

orlicz::DiscreteMeasureSpace measure_from_json(const ordered_json& j, const std::string& path) {
  const auto& ms = require(j, "masses", path);
  if (!ms.is_array()) throw SchemaError(path + ".masses", "expected an array");
  std::vector<double> masses;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    masses.push_back(parse_number(ms[i], path + ".masses[" + std::to_string(i) + "]"));
  }
  std::optional<orlicz::GridLayout> grid;
  if (j.contains("grid")) {
    const std::string gp = path + ".grid";
    const auto& g = j["grid"];
    const auto& dims = require(g, "dims", gp);
    if (!dims.is_array()) throw SchemaError(gp + ".dims", "expected an array");
    orlicz::GridLayout layout;
    for (const auto& d : dims) {
      if (!d.is_number_unsigned()) throw SchemaError(gp + ".dims", "expected positive integers");
      layout.dims.push_back(d.get<std::size_t>());
    }
    layout.mesh = parse_number(require(g, "mesh", gp), gp + ".mesh");
    grid = layout;
  }
  try {
    return orlicz::DiscreteMeasureSpace(std::move(masses), std::move(grid));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

ordered_json to_json(const orlicz::DiscreteMeasureSpace& omega) {
  ordered_json j;
  j["masses"] = omega.masses();
  if (omega.grid()) j["grid"] = {{"dims", omega.grid()->dims}, {"mesh", omega.grid()->mesh}};
  return j;
}

}  // namespace modspace::io
