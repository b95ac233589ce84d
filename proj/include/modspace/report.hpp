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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modspace {

enum class Verdict { kPass, kFail, kInconclusive };

std::string to_string(Verdict v);

/// Machine-readable evidence for a failed check: which points, which
/// parameters, and the numbers that broke the inequality.
struct Witness {
  std::string kind;
  std::vector<std::size_t> points;
  std::vector<std::pair<std::string, double>> values;
  std::string detail;

  Witness& with(std::string key, double v) {
    values.emplace_back(std::move(key), v);
    return *this;
  }
  std::optional<double> get(const std::string& key) const;
};

/// Structured verdict of a finite-resolution check.
///
/// `pass` certifies satisfaction only at the sampled resolution; `fail`
/// always carries at least one witness.
struct DiagnosticReport {
  std::string check;
  Verdict verdict = Verdict::kPass;
  std::string summary;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> notes;

  bool passed() const { return verdict == Verdict::kPass; }
  bool failed() const { return verdict == Verdict::kFail; }

  void fail(Witness w, std::string why);
  void metric(std::string key, double v) { metrics.emplace_back(std::move(key), v); }
  std::optional<double> get_metric(const std::string& key) const;
};

/// Thrown when an operation's precondition is violated on sampled data; the
/// witness names the offending sample (e.g. a pair of lambda values).
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, Witness witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

}  // namespace modspace
