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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modspace/io.hpp"
#include "modspace/report.hpp"

namespace modspace::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFail = 2;
inline constexpr int kExitInconclusive = 3;

int exit_code(Verdict v);

/// The experiment kinds accepted in a config's "experiment" field.
const std::vector<std::string>& experiment_kinds();

struct Outcome {
  Verdict verdict = Verdict::kPass;
  io::ordered_json report;
  /// Extra output files (name, contents), written next to report.json.
  std::vector<std::pair<std::string, std::string>> files;
};

/// Runs one experiment from a parsed config. Relative input paths resolve
/// against base_dir. Deterministic for equal (config, seed).
Outcome run_experiment(const io::ordered_json& config, const std::filesystem::path& base_dir,
                       std::uint64_t seed);

struct RunOptions {
  std::filesystem::path config;
  std::filesystem::path out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> experiment;
  bool quiet = false;
};

/// Loads the config, applies overrides, runs, and writes report.json, the
/// tables and metadata.json (the only file carrying a timestamp) into out.
int run(const RunOptions& opts, std::ostream& log, std::ostream& err);

struct GenerateOptions {
  std::string kind;  // metric_space, rademacher, lipschitz
  std::uint64_t seed = 0;
  std::filesystem::path out;
  std::size_t n = 6;
  std::size_t m = 16;
  double side = 1.0;
  double min_separation = 0.05;
};

/// Writes a fixture: a point-space JSON for metric_space, or a family CSV
/// plus a "<out>.measure.json" sidecar for the function families.
int generate(const GenerateOptions& opts, std::ostream& log, std::ostream& err);

}  // namespace modspace::cli
