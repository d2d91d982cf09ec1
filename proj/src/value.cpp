// Copyright 2026 The Authors.
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

#include "dupmatch/value.hpp"

#include <cctype>
#include <stdexcept>

namespace dupmatch {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("fixed-point overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("fixed-point overflow");
  }
  return out;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("malformed number '" + std::string(text) + "'");
}

}  // namespace

Value Value::parse(std::string_view text) {
  if (text == "inf") return infinity();
  if (text == "-inf") return neg_infinity();
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  const auto dot = rest.find('.');
  std::string_view whole = rest.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : rest.substr(dot + 1);
  if (whole.empty()) bad_number(text);
  if (dot != std::string_view::npos &&
      (frac.empty() || frac.size() > static_cast<std::size_t>(kFractionDigits))) {
    bad_number(text);
  }
  std::int64_t units = 0;
  for (char ch : whole) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_number(text);
    units = checked_add(checked_mul(units, 10), ch - '0');
  }
  std::int64_t micros = 0;
  std::int64_t place = kScale;
  for (char ch : frac) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_number(text);
    place /= 10;
    micros += (ch - '0') * place;
  }
  std::int64_t raw = checked_add(checked_mul(units, kScale), micros);
  return from_raw(negative ? -raw : raw);
}

std::string Value::to_string() const {
  if (kind_ == Kind::kInfinity) return "inf";
  if (kind_ == Kind::kNegInfinity) return "-inf";
  // Unsigned magnitude so INT64_MIN does not overflow on negation.
  const bool negative = raw_ < 0;
  const std::uint64_t magnitude =
      negative ? ~static_cast<std::uint64_t>(raw_) + 1
               : static_cast<std::uint64_t>(raw_);
  std::string out = negative ? "-" : "";
  out += std::to_string(magnitude / kScale);
  std::uint64_t frac = magnitude % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, kFractionDigits - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

bool Value::on_grid(Value step) const {
  if (!is_finite() || !step.is_finite() || step.raw_ <= 0) return false;
  return raw_ % step.raw_ == 0;
}

Value operator+(Value a, Value b) {
  if (a.is_finite() && b.is_finite()) {
    return Value::from_raw(checked_add(a.raw_, b.raw_));
  }
  if ((a.is_infinity() && b.is_neg_infinity()) ||
      (a.is_neg_infinity() && b.is_infinity())) {
    throw std::domain_error("inf + -inf is undefined");
  }
  return a.is_finite() ? b : a;
}

Value Value::operator-() const {
  switch (kind_) {
    case Kind::kInfinity:
      return neg_infinity();
    case Kind::kNegInfinity:
      return infinity();
    case Kind::kFinite:
      break;
  }
  return from_raw(checked_mul(raw_, -1));
}

Value operator-(Value a, Value b) { return a + (-b); }

Value operator*(Value a, std::int64_t k) {
  if (!a.is_finite()) {
    if (k == 0) throw std::domain_error("infinity * 0 is undefined");
    return k > 0 ? a : -a;
  }
  return Value::from_raw(checked_mul(a.raw_, k));
}

}  // namespace dupmatch
