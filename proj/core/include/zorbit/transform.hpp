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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "zorbit/kadic.hpp"

namespace zorbit {

/// The base k and modulus p of a Z-transformation, together with the unique
/// decomposition k = t*p + s + 1 with 1 <= s <= p.
class Params {
 public:
  /// Requires 3 <= k <= 2^32 and 2 <= p <= 2^32.
  static Params create(std::uint64_t k, std::uint64_t p);

  std::uint64_t k() const noexcept { return k_; }
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t t() const noexcept { return t_; }
  std::uint64_t s() const noexcept { return s_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(std::uint64_t k, std::uint64_t p, std::uint64_t t, std::uint64_t s)
      : k_(k), p_(p), t_(t), s_(s) {}

  std::uint64_t k_;
  std::uint64_t p_;
  std::uint64_t t_;
  std::uint64_t s_;
};

/// The piecewise digit map f. Writing a = r*p + j with 0 <= j < p:
///   j == 1       -> (r+1)(r+2)
///   j == 0       -> r
///   2 <= j < p   -> r + 1
/// Defined for every a >= 0, not only digits. Throws std::overflow_error if
/// the exact result does not fit 64 bits (use the BigNat overload then).
std::uint64_t digit_step(std::uint64_t a, std::uint64_t p);
BigNat digit_step(const BigNat& a, std::uint64_t p);

/// Z(n): sum of digit_step over the base-k digits of n. Z(0) = 0.
/// The 64-bit overload throws std::overflow_error when the sum overflows.
std::uint64_t z_transform(std::uint64_t n, const Params& params);
BigNat z_transform(const BigNat& n, const Params& params);

/// Non-throwing 64-bit form; returns nullopt on overflow.
std::optional<std::uint64_t> try_z_transform(std::uint64_t n,
                                             const Params& params) noexcept;

/// The Z-sequence n_0, n_1 = Z(n_0), ... up to and including the first
/// repeated value. values[preperiod] == values[preperiod + cycle_length] and
/// nothing before the last entry repeats.
struct OrbitTrace {
  Params params;
  std::vector<BigNat> values;
  std::size_t preperiod = 0;
  std::size_t cycle_length = 0;

  /// The distinct cycle elements in orbit order, starting at the entry point.
  std::span<const BigNat> cycle() const noexcept {
    return std::span<const BigNat>(values).subspan(preperiod, cycle_length);
  }
  std::size_t steps() const noexcept { return values.size() - 1; }
};

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

/// Raised by orbit() when no value repeats within the step budget. Carries
/// the values computed so far.
class IterationBudgetExceeded : public std::runtime_error {
 public:
  IterationBudgetExceeded(std::size_t budget, std::vector<BigNat> partial);

  std::size_t budget() const noexcept { return budget_; }
  const std::vector<BigNat>& partial_values() const noexcept {
    return partial_;
  }

 private:
  std::size_t budget_;
  std::vector<BigNat> partial_;
};

/// Iterates Z from `start` until the first repeat, applying Z at most
/// `max_steps` times.
OrbitTrace orbit(const BigNat& start, const Params& params,
                 std::size_t max_steps = kDefaultMaxSteps);

}  // namespace zorbit
