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
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zorbit {

/// Unbounded integer used for orbit start values. Always nonnegative in this
/// library; negative inputs are rejected at the public boundary.
using BigNat = boost::multiprecision::cpp_int;

/// A single base-k digit. Bases are capped at kMaxParameter, so a digit
/// always fits a machine word.
using Digit = std::uint64_t;

/// Upper limit for the base k and the modulus p.
inline constexpr std::uint64_t kMaxParameter = std::uint64_t{1} << 32;

/// Throws ParameterDomainError unless 2 <= base <= kMaxParameter.
void require_base(std::uint64_t base);

/// Parses a decimal string into a BigNat. Only ASCII digits are accepted.
BigNat parse_decimal(const std::string& text);

/// Little-endian base-k digits of a nonnegative integer. digits()[i] is the
/// coefficient of base^i. The stored form is canonical: no leading (high)
/// zeros, and zero is the empty vector.
class KAdicDigits {
 public:
  /// Validates every digit against `base` and trims high zeros.
  KAdicDigits(std::uint64_t base, std::vector<Digit> digits);

  std::uint64_t base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_.at(i); }

  friend bool operator==(const KAdicDigits&, const KAdicDigits&) = default;

 private:
  std::uint64_t base_;
  std::vector<Digit> digits_;
};

KAdicDigits to_digits(const BigNat& n, std::uint64_t base);
KAdicDigits to_digits(std::uint64_t n, std::uint64_t base);

/// Recomposes sum(d_i * base^i). Leading zeros are allowed here; any digit
/// >= base raises DigitDomainError.
BigNat from_digits(std::span<const Digit> digits, std::uint64_t base);
BigNat from_digits(const KAdicDigits& d);

/// Number of base-k digits, m, with k^(m-1) <= n < k^m. Zero counts as one
/// digit for display even though its digit vector is empty.
std::size_t digit_count(const BigNat& n, std::uint64_t base);
std::size_t digit_count(std::uint64_t n, std::uint64_t base) noexcept;

/// Schoolbook base-k addition with carry. Both operands must share a base.
KAdicDigits add(const KAdicDigits& lhs, const KAdicDigits& rhs);

std::string to_decimal(const BigNat& n);

}  // namespace zorbit
