// Copyright 2026 The zorbit Authors
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

#include "doctest.h"

#include "zorbit/errors.hpp"
#include "zorbit/kadic.hpp"
#include "zorbit/random.hpp"

namespace zorbit {
namespace {

std::vector<Digit> as_vec(const KAdicDigits& d) {
  return {d.digits().begin(), d.digits().end()};
}

TEST_CASE("to_digits splits into little-endian base-k digits") {
  CHECK(as_vec(to_digits(std::uint64_t{123789}, 137)) ==
        std::vector<Digit>{78, 81, 6});
  CHECK(as_vec(to_digits(std::uint64_t{6}, 5)) == std::vector<Digit>{1, 1});
  CHECK(to_digits(std::uint64_t{0}, 10).is_zero());
  CHECK(to_digits(std::uint64_t{0}, 10).size() == 0);
}

TEST_CASE("to_digits works past 64 bits") {
  const BigNat n = parse_decimal("340282366920938463463374607431768211457");
  const KAdicDigits d = to_digits(n, 16);
  CHECK(d.size() == 33);  // 2^128 + 1
  CHECK(d[0] == 1);
  CHECK(d[32] == 1);
  CHECK(from_digits(d) == n);
}

TEST_CASE("from_digits recomposes and tolerates leading zeros") {
  CHECK(from_digits(std::vector<Digit>{78, 81, 6}, 137) == 123789);
  CHECK(from_digits(std::vector<Digit>{}, 7) == 0);
  CHECK(from_digits(std::vector<Digit>{1, 1}, 5) == 6);
  CHECK(from_digits(std::vector<Digit>{1, 1, 0, 0}, 5) == 6);
}

TEST_CASE("digit domain errors") {
  CHECK_THROWS_AS(from_digits(std::vector<Digit>{3, 5}, 5), DigitDomainError);
  CHECK_THROWS_AS(KAdicDigits(4, {1, 4}), DigitDomainError);
}

TEST_CASE("base domain errors") {
  CHECK_THROWS_AS(to_digits(std::uint64_t{5}, 1), ParameterDomainError);
  CHECK_THROWS_AS(to_digits(BigNat(5), 0), ParameterDomainError);
  CHECK_THROWS_AS(digit_count(BigNat(5), 1), ParameterDomainError);
  CHECK_THROWS_AS(to_digits(std::uint64_t{5}, kMaxParameter + 1),
                  ParameterDomainError);
  CHECK_NOTHROW(to_digits(std::uint64_t{5}, kMaxParameter));
  CHECK_THROWS_AS(to_digits(BigNat(-3), 10), ParameterDomainError);
}

TEST_CASE("constructor canonicalises high zeros") {
  const KAdicDigits d(10, {3, 0, 0});
  CHECK(d.size() == 1);
  CHECK(KAdicDigits(10, {0, 0}).is_zero());
}

TEST_CASE("digit_count boundaries") {
  CHECK(digit_count(std::uint64_t{123789}, 137) == 3);
  CHECK(digit_count(std::uint64_t{0}, 10) == 1);
  CHECK(digit_count(std::uint64_t{136}, 137) == 1);
  CHECK(digit_count(std::uint64_t{137}, 137) == 2);
  CHECK(digit_count(BigNat(18768), 137) == 2);
  CHECK(digit_count(BigNat(18769), 137) == 3);
  const BigNat big = boost::multiprecision::pow(BigNat(7), 40);
  CHECK(digit_count(big, 7) == 41);
  CHECK(digit_count(big - 1, 7) == 40);
}

TEST_CASE("parse_decimal rejects anything but digits") {
  CHECK(parse_decimal("000123") == 123);
  CHECK_THROWS_AS(parse_decimal(""), ParameterDomainError);
  CHECK_THROWS_AS(parse_decimal("-1"), ParameterDomainError);
  CHECK_THROWS_AS(parse_decimal("12a"), ParameterDomainError);
  CHECK_THROWS_AS(parse_decimal("1e5"), ParameterDomainError);
}

TEST_CASE("property: round trip, canonical form and digit count") {
  SeededRng rng(20261014);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t k = rng.between(2, i % 3 == 0 ? kMaxParameter : 300);
    BigNat n = rng.below(UINT64_MAX);
    if (i % 2 == 0) n = n * rng.below(UINT64_MAX) + rng.below(1000);
    const KAdicDigits d = to_digits(n, k);
    REQUIRE(from_digits(d) == n);
    if (n != 0) {
      CHECK(d.digits().back() != 0);
      CHECK(digit_count(n, k) == d.size());
    }
    for (Digit x : d.digits()) CHECK(x < k);
  }
}

TEST_CASE("property: base-k long addition agrees with integer addition") {
  SeededRng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t k = rng.between(2, i % 5 == 0 ? kMaxParameter : 1000);
    const BigNat a = BigNat(rng.below(UINT64_MAX)) * rng.below(1u << 20);
    const BigNat b = rng.below(i % 2 ? UINT64_MAX : 50);
    const KAdicDigits sum = add(to_digits(a, k), to_digits(b, k));
    REQUIRE(from_digits(sum) == a + b);
    CHECK(sum == to_digits(a + b, k));
  }
  CHECK_THROWS_AS(add(to_digits(std::uint64_t{1}, 3), to_digits(std::uint64_t{1}, 4)),
                  ParameterDomainError);
}

}  // namespace
}  // namespace zorbit
