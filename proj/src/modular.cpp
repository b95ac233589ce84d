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

#include "modspace/modular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modspace {

LambdaGrid::LambdaGrid(std::vector<double> values, double floor, double cap)
    : values_(std::move(values)), floor_(floor), cap_(cap) {
  if (values_.empty()) throw std::invalid_argument("lambda grid is empty");
  if (!(floor_ > 0.0)) throw std::invalid_argument("lambda grid floor must be positive");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!(values_[k] > 0.0) || !std::isfinite(values_[k])) {
      throw std::invalid_argument("lambda grid values must be positive and finite");
    }
    if (k > 0 && !(values_[k] > values_[k - 1])) {
      throw std::invalid_argument("lambda grid values must be strictly increasing");
    }
  }
  if (floor_ > values_.front() || values_.back() > cap_) {
    throw std::invalid_argument("lambda grid values must lie within [floor, cap]");
  }
}

LambdaGrid LambdaGrid::from_values(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("lambda grid is empty");
  const double lo = values.front();
  const double hi = values.back();
  return LambdaGrid(std::move(values), lo, hi);
}

LambdaGrid LambdaGrid::log_spaced(double lo, double hi, std::size_t per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade == 0) {
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and per_decade > 0");
  }
  const double decades = std::log10(hi / lo);
  const auto steps = static_cast<std::size_t>(std::ceil(decades * static_cast<double>(per_decade)));
  std::vector<double> v;
  v.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(steps);
    v.push_back(k == steps ? hi : lo * std::pow(hi / lo, t));
  }
  return LambdaGrid(std::move(v), lo, hi);
}

LambdaGrid LambdaGrid::linear(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw std::invalid_argument("linear: need 0 < lo < hi and count >= 2");
  }
  std::vector<double> v;
  v.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    v.push_back(k + 1 == count ? hi
                               : lo + (hi - lo) * static_cast<double>(k) /
                                          static_cast<double>(count - 1));
  }
  return LambdaGrid(std::move(v), lo, hi);
}

ModularFamily::ModularFamily(PointSpace space, ModularEval eval, ModularClaims claims,
                             std::string name)
    : ModularFamily(std::make_shared<const PointSpace>(std::move(space)), std::move(eval), claims,
                    std::move(name)) {}

ModularFamily::ModularFamily(std::shared_ptr<const PointSpace> space, ModularEval eval,
                             ModularClaims claims, std::string name)
    : space_(std::move(space)), eval_(std::move(eval)), claims_(claims), name_(std::move(name)) {
  if (!space_) throw std::invalid_argument("modular family needs a point space");
  if (!eval_) throw std::invalid_argument("modular family needs an evaluator");
}

XReal ModularFamily::operator()(double lambda, std::size_t i, std::size_t j) const {
  if (!(lambda > 0.0)) {
    throw std::domain_error("modular evaluated at non-positive lambda " + format_double(lambda));
  }
  space_->check_index(i);
  space_->check_index(j);
  return eval_(lambda, i, j);
}

}  // namespace modspace
