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

#ifndef DUPMATCH_VALUE_HPP_
#define DUPMATCH_VALUE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dupmatch {

// Exact fixed-point number with 10^-6 resolution, plus the two infinities.
//
// Finite values are stored as an integer count of micro-units. Infinity is
// accepted for thresholds only; negative infinity shows up as an internal
// ranking key when an infinite threshold is subtracted from a preference.
// Arithmetic saturates at the infinities and is otherwise exact.
class Value {
 public:
  static constexpr std::int64_t kScale = 1'000'000;
  static constexpr int kFractionDigits = 6;

  enum class Kind : std::uint8_t { kNegInfinity, kFinite, kInfinity };

  constexpr Value() = default;

  static constexpr Value from_raw(std::int64_t raw) {
    return Value(Kind::kFinite, raw);
  }
  static constexpr Value from_int(std::int64_t units) {
    return Value(Kind::kFinite, units * kScale);
  }
  static constexpr Value infinity() { return Value(Kind::kInfinity, 0); }
  static constexpr Value neg_infinity() {
    return Value(Kind::kNegInfinity, 0);
  }

  // Accepts "inf", "-inf", or a decimal with at most six fraction digits.
  // Throws std::invalid_argument on anything else.
  static Value parse(std::string_view text);

  // Shortest decimal form: "3", "0.5", "-1.25", "inf".
  std::string to_string() const;

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_infinity() const { return kind_ == Kind::kInfinity; }
  constexpr bool is_neg_infinity() const {
    return kind_ == Kind::kNegInfinity;
  }
  // Micro-units; zero for the infinities.
  constexpr std::int64_t raw() const { return raw_; }

  // True when the value is finite and an integer multiple of `step`.
  bool on_grid(Value step) const;

  friend Value operator+(Value a, Value b);
  friend Value operator-(Value a, Value b);
  friend Value operator*(Value a, std::int64_t k);
  Value operator-() const;

  friend constexpr auto operator<=>(const Value&, const Value&) = default;
  friend constexpr bool operator==(const Value&, const Value&) = default;

 private:
  constexpr Value(Kind kind, std::int64_t raw) : kind_(kind), raw_(raw) {}

  // Declaration order matters: the defaulted comparison orders by kind first.
  Kind kind_ = Kind::kFinite;
  std::int64_t raw_ = 0;
};

}  // namespace dupmatch

#endif  // DUPMATCH_VALUE_HPP_
