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

#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

using dupmatch::Value;

TEST_CASE("parse and print round trip") {
  for (const char* text : {"0", "3", "0.5", "-1.25", "0.000001", "123456.789",
                           "inf", "-inf"}) {
    CHECK(Value::parse(text).to_string() == text);
  }
  CHECK(Value::parse("2.500").to_string() == "2.5");
  CHECK(Value::parse("-0").to_string() == "0");
  CHECK(Value::parse("1.5").raw() == 1'500'000);
}

TEST_CASE("malformed numbers are rejected") {
  for (const char* text : {"", "-", ".5", "1.", "1.0000001", "abc", "1e3",
                           "+1", "1.2.3", "Infinity", "99999999999999999999"}) {
    CAPTURE(text);
    CHECK_THROWS(Value::parse(text));
  }
}

TEST_CASE("ordering puts the infinities at the ends") {
  const Value lo = Value::neg_infinity();
  const Value hi = Value::infinity();
  const Value big = Value::from_int(1'000'000'000);
  CHECK(lo < -big);
  CHECK(big < hi);
  CHECK(Value::parse("0.1") < Value::parse("0.2"));
  CHECK(Value() == Value::from_int(0));
}

TEST_CASE("infinite arithmetic saturates") {
  const Value hi = Value::infinity();
  CHECK(Value::from_int(3) - hi == Value::neg_infinity());
  CHECK(hi + Value::from_int(-7) == hi);
  CHECK(-hi == Value::neg_infinity());
  CHECK(hi * 2 == hi);
  CHECK(hi * -1 == Value::neg_infinity());
  CHECK_THROWS_AS(hi + Value::neg_infinity(), std::domain_error);
  CHECK_THROWS_AS(hi - hi, std::domain_error);
  CHECK_THROWS_AS(hi * 0, std::domain_error);
}

TEST_CASE("finite overflow throws instead of wrapping") {
  const Value top = Value::from_raw(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(top + Value::from_raw(1), std::overflow_error);
  CHECK_THROWS_AS(top * 2, std::overflow_error);
}

TEST_CASE("grid membership") {
  CHECK(Value::parse("1.5").on_grid(Value::parse("0.5")));
  CHECK_FALSE(Value::parse("1.5").on_grid(Value::from_int(1)));
  CHECK_FALSE(Value::infinity().on_grid(Value::from_int(1)));
  CHECK_FALSE(Value::from_int(1).on_grid(Value()));
}

TEST_CASE("finite arithmetic matches integer arithmetic on micro-units") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> pick(-(1LL << 40), 1LL << 40);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = pick(rng);
    const std::int64_t b = pick(rng);
    const Value va = Value::from_raw(a);
    const Value vb = Value::from_raw(b);
    CHECK((va + vb).raw() == a + b);
    CHECK((va - vb).raw() == a - b);
    CHECK((va < vb) == (a < b));
    CHECK(Value::parse(va.to_string()) == va);
  }
}
