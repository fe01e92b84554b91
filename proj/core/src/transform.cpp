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

#include "zorbit/transform.hpp"

#include <cassert>
#include <limits>
#include <map>
#include <string>

#include "zorbit/errors.hpp"

namespace zorbit {
namespace {

using u128 = unsigned __int128;

void require_modulus(std::uint64_t p) {
  if (p < 2 || p > kMaxParameter) {
    throw ParameterDomainError("modulus p must lie in [2, 2^32], got " +
                               std::to_string(p));
  }
}

#ifndef NDEBUG
// Quotient form: (a+p-1)(a+2p-1)/p^2 for a = 1 (mod p), else
// (a+p-j)/p. Both divisions must be exact.
bool quotient_form_agrees(std::uint64_t a, std::uint64_t p,
                          std::uint64_t result) {
  if (a > (std::uint64_t{1} << 60)) return true;
  const u128 j = a % p;
  if (j == 1) {
    const u128 num = (u128{a} + p - 1) * (u128{a} + 2 * u128{p} - 1);
    const u128 den = u128{p} * p;
    return num % den == 0 && num / den == result;
  }
  const u128 num = u128{a} + (j == 0 ? 0 : p - j);
  return num % p == 0 && num / p == result;
}
#endif

}  // namespace

Params Params::create(std::uint64_t k, std::uint64_t p) {
  if (k < 3 || k > kMaxParameter) {
    throw ParameterDomainError("base k must lie in [3, 2^32], got " +
                               std::to_string(k));
  }
  require_modulus(p);
  // k - 1 = t*p + s with s in [1, p]  <=>  k - 2 = t*p + (s - 1).
  return Params(k, p, (k - 2) / p, (k - 2) % p + 1);
}

std::uint64_t digit_step(std::uint64_t a, std::uint64_t p) {
  require_modulus(p);
  const std::uint64_t r = a / p;
  const std::uint64_t j = a % p;
  std::uint64_t result;
  if (j == 1) {
    const u128 wide = (u128{r} + 1) * (u128{r} + 2);
    if (wide > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("digit_step result exceeds 64 bits");
    }
    result = static_cast<std::uint64_t>(wide);
  } else if (j == 0) {
    result = r;
  } else {
    result = r + 1;
  }
  assert(quotient_form_agrees(a, p, result));
  return result;
}

BigNat digit_step(const BigNat& a, std::uint64_t p) {
  require_modulus(p);
  if (a < 0) throw ParameterDomainError("digit_step needs a >= 0");
  BigNat r, j;
  boost::multiprecision::divide_qr(a, BigNat(p), r, j);
  if (j == 1) return (r + 1) * (r + 2);
  if (j == 0) return r;
  return r + 1;
}

std::optional<std::uint64_t> try_z_transform(std::uint64_t n,
                                             const Params& params) noexcept {
  const std::uint64_t k = params.k();
  const std::uint64_t p = params.p();
  std::uint64_t sum = 0;
  while (n != 0) {
    const std::uint64_t digit = n % k;
    n /= k;
    const std::uint64_t r = digit / p;
    const std::uint64_t j = digit % p;
    // digit < 2^32 so r < 2^31 and (r+1)(r+2) < 2^63.
    const std::uint64_t f = j == 1 ? (r + 1) * (r + 2) : (j == 0 ? r : r + 1);
    if (__builtin_add_overflow(sum, f, &sum)) return std::nullopt;
  }
  return sum;
}

std::uint64_t z_transform(std::uint64_t n, const Params& params) {
  if (auto z = try_z_transform(n, params)) return *z;
  throw std::overflow_error("Z(n) exceeds 64 bits");
}

BigNat z_transform(const BigNat& n, const Params& params) {
  if (n < 0) throw ParameterDomainError("Z is defined for n >= 0 only");
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    if (auto z = try_z_transform(n.convert_to<std::uint64_t>(), params)) {
      return *z;
    }
  }
  BigNat sum = 0;
  const KAdicDigits digits = to_digits(n, params.k());
  for (Digit d : digits.digits()) {
    sum += digit_step(d, params.p());
  }
  return sum;
}

IterationBudgetExceeded::IterationBudgetExceeded(std::size_t budget,
                                                 std::vector<BigNat> partial)
    : std::runtime_error("no repeated value within " + std::to_string(budget) +
                         " Z-steps"),
      budget_(budget),
      partial_(std::move(partial)) {}

OrbitTrace orbit(const BigNat& start, const Params& params,
                 std::size_t max_steps) {
  if (start < 0) throw ParameterDomainError("orbit start must be >= 0");
  if (max_steps == 0) throw ParameterDomainError("max_steps must be >= 1");

  std::vector<BigNat> values{start};
  std::map<BigNat, std::size_t> first_seen{{start, 0}};
  for (std::size_t step = 1; step <= max_steps; ++step) {
    BigNat next = z_transform(values.back(), params);
    auto [it, inserted] = first_seen.try_emplace(next, step);
    values.push_back(std::move(next));
    if (!inserted) {
      const std::size_t entry = it->second;
      return OrbitTrace{params, std::move(values), entry, step - entry};
    }
  }
  throw IterationBudgetExceeded(max_steps, std::move(values));
}

}  // namespace zorbit
