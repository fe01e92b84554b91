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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zorbit/transform.hpp"

namespace zorbit {

/// Which half of condition (c) a value of q violates.
enum class CClause { kCongruence, kEquality };

std::string_view to_string(CClause clause) noexcept;

struct CViolation {
  std::uint64_t q;
  CClause clause;

  friend bool operator==(const CViolation&, const CViolation&) = default;
};

struct BCheck {
  bool holds;
  std::vector<std::uint64_t> violations;
};

struct CCheck {
  bool holds;
  std::vector<CViolation> violations;
};

/// Outcome of conditions (a), (b), (c) for one parameter pair. Every q listed
/// satisfies q*q < k.
struct HypothesisReport {
  Params params;
  bool a_holds;
  bool b_holds;
  std::vector<std::uint64_t> b_violations;
  bool c_holds;
  std::vector<CViolation> c_violations;

  bool all_hold() const noexcept { return a_holds && b_holds && c_holds; }
  /// Names of failing conditions in order, e.g. {"b", "c"}.
  std::vector<std::string> failed_conditions() const;
};

/// (a): p >= 3 and 2p - 1 <= k <= 3p^2.
bool check_a(const Params& params) noexcept;

/// (b): no q with q*q < k has (q+1)(q+2) = -1 (mod p).
BCheck check_b(const Params& params);

/// (c): no q with q*q < k has (q+1)(q+2) = k (mod p) [congruence], nor
/// k = (q+1)(q+2) - 1 - q*p over the integers [equality].
CCheck check_c(const Params& params);

HypothesisReport check_all(const Params& params);

}  // namespace zorbit
