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

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modspace/compactness.hpp"
#include "modspace/matrix.hpp"
#include "modspace/orlicz.hpp"
#include "modspace/point_space.hpp"
#include "modspace/report.hpp"
#include "modspace/topology.hpp"

namespace modspace::io {

using nlohmann::ordered_json;

/// Malformed input document; the message starts with the offending field path.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A number, or the string "inf" for +infinity.
ordered_json number(double v);
double parse_number(const ordered_json& j, const std::string& path);

std::string read_text(const std::filesystem::path& p);
void write_text(const std::filesystem::path& p, const std::string& text);
ordered_json read_json(const std::filesystem::path& p);

/// {"labels": [...], "distance": [[...]]} with "inf" tokens allowed.
PointSpace point_space_from_json(const ordered_json& j, const std::string& path,
                                 TriangleCheck triangle = TriangleCheck::kEnforce);
ordered_json to_json(const PointSpace& space);

/// Row-major CSV, "inf" for +infinity.
std::string to_csv(const SquareMatrix& m);
ordered_json to_json(const DistanceMatrix& d);

ordered_json to_json(const Witness& w);
ordered_json to_json(const DiagnosticReport& r);
ordered_json to_json(const NetCover& net);
ordered_json to_json(const RefinementVerdict& v);

/// "x,y" pairs of V_n, one per line after a header.
std::string to_csv(const Entourage& v);

/// Rows = functions, columns = cells.
orlicz::FunctionFamily family_from_csv(const std::string& text, const std::string& path);
std::string to_csv(const orlicz::FunctionFamily& f);

/// {"masses": [...], "grid": {"dims": [...], "mesh": h}} (grid optional).
orlicz::DiscreteMeasureSpace measure_from_json(const ordered_json& j, const std::string& path);
ordered_json to_json(const orlicz::DiscreteMeasureSpace& omega);

}  // namespace modspace::io
