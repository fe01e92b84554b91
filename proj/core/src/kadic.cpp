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

#include "zorbit/kadic.hpp"

#include <algorithm>
#include <limits>

#include "zorbit/errors.hpp"

namespace zorbit {

void require_base(std::uint64_t base) {
  if (base < 2 || base > kMaxParameter) {
    throw ParameterDomainError("base must lie in [2, 2^32], got " +
                               std::to_string(base));
  }
}

BigNat parse_decimal(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParameterDomainError("not a nonnegative decimal integer: '" + text +
                               "'");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = text.find_first_not_of('0');
  return first == std::string::npos ? BigNat(0) : BigNat(text.substr(first));
}

KAdicDigits::KAdicDigits(std::uint64_t base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  require_base(base_);
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= base_) {
      throw DigitDomainError("digit " + std::to_string(digits_[i]) +
                             " at position " + std::to_string(i) +
                             " is not below base " + std::to_string(base_));
    }
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

KAdicDigits to_digits(const BigNat& n, std::uint64_t base) {
  require_base(base);
  if (n < 0) throw ParameterDomainError("negative integers have no digits");
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return to_digits(n.convert_to<std::uint64_t>(), base);
  }
  std::vector<Digit> out;
  BigNat rest = n;
  const BigNat k = base;
  BigNat q, r;
  while (rest != 0) {
    boost::multiprecision::divide_qr(rest, k, q, r);
    out.push_back(r.convert_to<Digit>());
    rest.swap(q);
  }
  return KAdicDigits(base, std::move(out));
}

KAdicDigits to_digits(std::uint64_t n, std::uint64_t base) {
  require_base(base);
  std::vector<Digit> out;
  while (n != 0) {
    out.push_back(n % base);
    n /= base;
  }
  return KAdicDigits(base, std::move(out));
}

BigNat from_digits(std::span<const Digit> digits, std::uint64_t base) {
  require_base(base);
  BigNat value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= base) {
      throw DigitDomainError("digit " + std::to_string(digits[i]) +
                             " at position " + std::to_string(i) +
                             " is not below base " + std::to_string(base));
    }
    value *= base;
    value += digits[i];
  }
  return value;
}

BigNat from_digits(const KAdicDigits& d) {
  return from_digits(d.digits(), d.base());
}

std::size_t digit_count(const BigNat& n, std::uint64_t base) {
  require_base(base);
  if (n < 0) throw ParameterDomainError("negative integers have no digits");
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return digit_count(n.convert_to<std::uint64_t>(), base);
  }
  std::size_t m = 0;
  BigNat power = 1;
  while (power <= n) {
    power *= base;
    ++m;
  }
  return m;
}

std::size_t digit_count(std::uint64_t n, std::uint64_t base) noexcept {
  std::size_t m = 1;
  while (n >= base) {
    n /= base;
    ++m;
  }
  return m;
}

KAdicDigits add(const KAdicDigits& lhs, const KAdicDigits& rhs) {
  if (lhs.base() != rhs.base()) {
    throw ParameterDomainError("cannot add digits of different bases");
  }
  const std::uint64_t k = lhs.base();
  const std::size_t len = std::max(lhs.size(), rhs.size());
  std::vector<Digit> sum;
  sum.reserve(len + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < len; ++i) {
    // Each term is < 2^32, so the column sum cannot overflow.
    std::uint64_t column = carry;
    if (i < lhs.size()) column += lhs[i];
    if (i < rhs.size()) column += rhs[i];
    sum.push_back(column % k);
    carry = column / k;
  }
  if (carry != 0) sum.push_back(carry);
  return KAdicDigits(k, std::move(sum));
}

std::string to_decimal(const BigNat& n) { return n.str(); }

}  // namespace zorbit
