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

#include "modspace/xreal.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace modspace {

XReal::XReal(double v) : value_(v) {
  if (std::isnan(v) || v < 0.0) {
    throw std::domain_error("XReal: value must be nonnegative, got " + format_double(v));
  }
}

XReal operator+(XReal a, XReal b) {
  if (a.is_infinite() || b.is_infinite()) return XReal::infinity();
  return XReal(XReal::Raw{}, a.value_ + b.value_);
}

XReal operator*(XReal a, XReal b) {
  if (a.is_zero() || b.is_zero()) return XReal();
  if (a.is_infinite() || b.is_infinite()) return XReal::infinity();
  return XReal(XReal::Raw{}, a.value_ * b.value_);
}

XReal min(XReal a, XReal b) { return b < a ? b : a; }
XReal max(XReal a, XReal b) { return a < b ? b : a; }

std::string XReal::to_string() const { return format_double(value_); }

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

}  // namespace modspace
