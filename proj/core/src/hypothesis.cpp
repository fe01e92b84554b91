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

#include "zorbit/hypothesis.hpp"

namespace zorbit {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

// Calls fn(q) for every q >= 0 with q*q < k. Integer comparison only.
template <class Fn>
void for_each_q(std::uint64_t k, Fn&& fn) {
  for (std::uint64_t q = 0; q * q < k; ++q) fn(q);
}

}  // namespace

std::string_view to_string(CClause clause) noexcept {
  return clause == CClause::kCongruence ? "congruence" : "equality";
}

std::vector<std::string> HypothesisReport::failed_conditions() const {
  std::vector<std::string> out;
  if (!a_holds) out.emplace_back("a");
  if (!b_holds) out.emplace_back("b");
  if (!c_holds) out.emplace_back("c");
  return out;
}

bool check_a(const Params& params) noexcept {
  const u128 k = params.k();
  const u128 p = params.p();
  return p >= 3 && 2 * p - 1 <= k && k <= 3 * p * p;
}

BCheck check_b(const Params& params) {
  const std::uint64_t p = params.p();
  BCheck out{true, {}};
  for_each_q(params.k(), [&](std::uint64_t q) {
    if (((q + 1) * (q + 2)) % p == p - 1) out.violations.push_back(q);
  });
  out.holds = out.violations.empty();
  return out;
}

CCheck check_c(const Params& params) {
  const std::uint64_t k = params.k();
  const std::uint64_t p = params.p();
  CCheck out{true, {}};
  for_each_q(k, [&](std::uint64_t q) {
    const std::uint64_t product = (q + 1) * (q + 2);
    if (product % p == k % p) {
      out.violations.push_back({q, CClause::kCongruence});
    }
    const i128 rhs = i128{product} - 1 - i128{q} * i128{p};
    if (rhs == i128{k}) out.violations.push_back({q, CClause::kEquality});
  });
  out.holds = out.violations.empty();
  return out;
}

HypothesisReport check_all(const Params& params) {
  BCheck b = check_b(params);
  CCheck c = check_c(params);
  return HypothesisReport{params,          check_a(params),
                          b.holds,         std::move(b.violations),
                          c.holds,         std::move(c.violations)};
}

}  // namespace zorbit
