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

#include "../oracles.hpp"
#include "zorbit/dynamics.hpp"
#include "zorbit/errors.hpp"
#include "zorbit/random.hpp"
#include "zorbit/transform.hpp"

namespace zorbit {
namespace {

std::vector<BigNat> big(std::initializer_list<std::uint64_t> xs) {
  return {xs.begin(), xs.end()};
}

TEST_CASE("Params decomposes k = t*p + s + 1") {
  const Params a = Params::create(137, 11);
  CHECK(a.t() == 12);
  CHECK(a.s() == 4);
  const Params b = Params::create(10, 5);
  CHECK(b.t() == 1);
  CHECK(b.s() == 4);
  const Params c = Params::create(5, 3);
  CHECK(c.t() == 1);
  CHECK(c.s() == 1);
  // s reaches p when p divides k - 1.
  const Params d = Params::create(7, 3);
  CHECK(d.t() == 1);
  CHECK(d.s() == 3);

  SeededRng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto k = rng.between(3, kMaxParameter);
    const auto p = rng.between(2, i % 2 ? 50 : kMaxParameter);
    const Params x = Params::create(k, p);
    CHECK(x.t() * x.p() + x.s() + 1 == k);
    CHECK(x.s() >= 1);
    CHECK(x.s() <= x.p());
  }
}

TEST_CASE("Params rejects out-of-domain values") {
  CHECK_THROWS_AS(Params::create(2, 3), ParameterDomainError);
  CHECK_THROWS_AS(Params::create(10, 1), ParameterDomainError);
  CHECK_THROWS_AS(Params::create(kMaxParameter + 1, 3), ParameterDomainError);
  CHECK_THROWS_AS(Params::create(10, kMaxParameter + 1), ParameterDomainError);
  CHECK_NOTHROW(Params::create(3, 2));
}

TEST_CASE("digit_step values") {
  CHECK(digit_step(std::uint64_t{78}, 11) == 72);
  CHECK(oracle::f(78, 11) == 72);  // 88*99/121
  CHECK(digit_step(std::uint64_t{1}, 3) == 2);
  CHECK(digit_step(std::uint64_t{2}, 3) == 1);
  CHECK(digit_step(std::uint64_t{6}, 5) == 6);
  for (std::uint64_t p = 2; p < 40; ++p) {
    CHECK(digit_step(std::uint64_t{0}, p) == 0);
  }
  // Defined beyond single digits.
  CHECK(digit_step(std::uint64_t{12 * 11 + 1}, 11) == 13 * 14);
  CHECK_THROWS_AS(digit_step(std::uint64_t{4}, 1), ParameterDomainError);
}

TEST_CASE("digit_step p = 2 has only the residue-0 and residue-1 branches") {
  for (std::uint64_t a = 0; a < 200; ++a) {
    const std::uint64_t r = a / 2;
    CHECK(digit_step(a, 2) == (a % 2 ? (r + 1) * (r + 2) : r));
  }
}

TEST_CASE("digit_step overflow is reported, BigNat overload is exact") {
  const std::uint64_t a = (std::uint64_t{1} << 40) * 3 + 1;  // r = 2^40
  CHECK_THROWS_AS(digit_step(a, 3), std::overflow_error);
  const BigNat r = BigNat(1) << 40;
  CHECK(digit_step(BigNat(a), 3) == (r + 1) * (r + 2));
}

TEST_CASE("property: digit_step matches the exact quotient forms") {
  SeededRng rng(99);
  for (std::uint64_t p = 2; p <= 60; ++p) {
    for (std::uint64_t a = 0; a < 2000; ++a) {
      bool exact = false;
      const std::uint64_t want = oracle::f(a, p, &exact);
      REQUIRE(exact);
      REQUIRE(digit_step(a, p) == want);
    }
  }
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t p = rng.between(2, kMaxParameter);
    const std::uint64_t a = rng.below(std::uint64_t{1} << 60);
    bool exact = false;
    const std::uint64_t want = oracle::f(a, p, &exact);
    REQUIRE(exact);
    if (a / p >= (std::uint64_t{1} << 31)) continue;  // oracle result is 64-bit
    REQUIRE(digit_step(a, p) == want);
    REQUIRE(digit_step(BigNat(a), p) == want);
  }
}

TEST_CASE("z_transform examples") {
  CHECK(z_transform(std::uint64_t{123789}, Params::create(137, 11)) == 81);
  CHECK(z_transform(std::uint64_t{6}, Params::create(5, 3)) == 4);
  CHECK(z_transform(BigNat(0), Params::create(10, 5)) == 0);
}

TEST_CASE("property: z_transform agrees with the oracle, 64-bit and big paths") {
  SeededRng rng(5);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t k = rng.between(3, i % 4 ? 600 : 100000);
    const std::uint64_t p = rng.between(2, i % 3 ? 30 : k);
    const Params params = Params::create(k, p);
    const std::uint64_t n = rng.below(i % 2 ? 1000000 : UINT64_MAX / 2);
    const std::uint64_t want = oracle::z(n, k, p);
    REQUIRE(z_transform(n, params) == want);
    REQUIRE(z_transform(BigNat(n), params) == want);
  }
}

TEST_CASE("z_transform on a number wider than 64 bits") {
  const Params params = Params::create(10, 5);
  // 10^30 + 6: digits are 6, twenty-nine zeros, 1 -> f = 6 + 2.
  const BigNat n = boost::multiprecision::pow(BigNat(10), 30) + 6;
  CHECK(z_transform(n, params) == 8);
  // All nines over 40 digits: f(9) = 2 each.
  const BigNat nines = boost::multiprecision::pow(BigNat(10), 40) - 1;
  CHECK(z_transform(nines, params) == 80);
}

TEST_CASE("invariant: single digits map through digit_step") {
  for (std::uint64_t k = 3; k < 80; ++k) {
    for (std::uint64_t p = 2; p <= k + 2; ++p) {
      const Params params = Params::create(k, p);
      for (std::uint64_t n = 0; n < k; ++n) {
        REQUIRE(z_transform(n, params) == digit_step(n, p));
      }
    }
  }
}

TEST_CASE("invariant: Z(1) = 2 and Z(2) = 1 for every admitted pair") {
  SeededRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Params params = Params::create(rng.between(3, kMaxParameter),
                                         rng.between(2, kMaxParameter));
    CHECK(z_transform(std::uint64_t{1}, params) == 2);
    CHECK(z_transform(std::uint64_t{2}, params) == 1);
  }
}

TEST_CASE("invariant: single digits off residue 1 contract") {
  for (std::uint64_t k = 3; k < 120; ++k) {
    for (std::uint64_t p = 2; p < 30; ++p) {
      const Params params = Params::create(k, p);
      for (std::uint64_t n = 2; n < k; ++n) {
        if (n % p == 1) continue;
        REQUIRE(z_transform(n, params) < n);
      }
    }
  }
}

TEST_CASE("invariant: digit_step over one digit peaks at t*p + 1") {
  for (std::uint64_t k = 3; k < 300; ++k) {
    for (std::uint64_t p = 2; p < 25; ++p) {
      const Params params = Params::create(k, p);
      std::uint64_t peak = 0;
      for (std::uint64_t a = 0; a < k; ++a) {
        peak = std::max(peak, oracle::f(a, p));
      }
      REQUIRE(peak == max_digit_step(params));
      REQUIRE(digit_step(params.t() * p + 1, p) == peak);
    }
  }
}

TEST_CASE("orbit examples") {
  const OrbitTrace one = orbit(123789, Params::create(137, 11));
  CHECK(one.values == big({123789, 81, 8, 1, 2, 1}));
  CHECK(one.preperiod == 3);
  CHECK(one.cycle_length == 2);
  CHECK(one.steps() == 5);

  const OrbitTrace six = orbit(6, Params::create(10, 5));
  CHECK(six.values == big({6, 6}));
  CHECK(six.preperiod == 0);
  CHECK(six.cycle_length == 1);

  const OrbitTrace four = orbit(4, Params::create(5, 3));
  CHECK(four.values == big({4, 6, 4}));
  CHECK(four.preperiod == 0);
  CHECK(four.cycle_length == 2);

  const OrbitTrace two = orbit(2, Params::create(5, 3));
  CHECK(two.values == big({2, 1, 2}));
  CHECK(two.cycle_length == 2);

  const OrbitTrace zero = orbit(0, Params::create(10, 5));
  CHECK(zero.values == big({0, 0}));
  CHECK(zero.cycle().size() == 1);

  const OrbitTrace ex2 = orbit(9827, Params::create(5, 3));
  CHECK(ex2.values == big({9827, 4, 6, 4}));
  const OrbitTrace ex3 = orbit(8512, Params::create(10, 5));
  CHECK(ex3.values == big({8512, 6, 6}));
}

TEST_CASE("orbit budget") {
  const Params params = Params::create(137, 11);
  CHECK_NOTHROW(orbit(123789, params, 5));
  try {
    orbit(123789, params, 4);
    FAIL("expected IterationBudgetExceeded");
  } catch (const IterationBudgetExceeded& e) {
    CHECK(e.budget() == 4);
    CHECK(e.partial_values() == big({123789, 81, 8, 1, 2}));
  }
  CHECK_THROWS_AS(orbit(1, params, 0), ParameterDomainError);
  CHECK_THROWS_AS(orbit(BigNat(-1), params), ParameterDomainError);
}

TEST_CASE("orbit from a huge start collapses at once") {
  const BigNat n = boost::multiprecision::pow(BigNat(137), 200) - 1;
  const OrbitTrace t = orbit(n, Params::create(137, 11));
  // 200 digits of 136 = 12*11 + 4 -> f = 13 each.
  CHECK(t.values[1] == 2600);
  CHECK(t.cycle_length == 2);
}

TEST_CASE("property: orbit matches a naive seen-set orbit") {
  SeededRng rng(3);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t k = rng.between(3, 400);
    const std::uint64_t p = rng.between(2, 20);
    const std::uint64_t n = rng.below(1'000'000);
    const OrbitTrace t = orbit(n, Params::create(k, p));
    const oracle::NaiveOrbit o = oracle::orbit(n, k, p);
    REQUIRE(t.preperiod == o.preperiod);
    REQUIRE(t.cycle_length == o.cycle_length);
    REQUIRE(t.values.size() == o.values.size());
    for (std::size_t j = 0; j < o.values.size(); ++j) {
      REQUIRE(t.values[j] == o.values[j]);
    }
  }
}

}  // namespace
}  // namespace zorbit
