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
#include <string>
#include <string_view>
#include <vector>

#include "zorbit/hypothesis.hpp"
#include "zorbit/kadic.hpp"
#include "zorbit/transform.hpp"

namespace zorbit {

/// Largest absorbing set the census will hold in memory.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 26;

/// A periodic orbit, rotated so its minimum element comes first.
struct Cycle {
  std::vector<std::uint64_t> values;
  /// Starting points in the census scan range whose orbit ends here.
  std::uint64_t basin_size = 0;

  std::size_t length() const noexcept { return values.size(); }
  std::uint64_t min() const { return values.front(); }
  bool is_degenerate() const noexcept {
    return values.size() == 1 && values[0] == 0;
  }
  bool is_one_two() const noexcept {
    return values == std::vector<std::uint64_t>{1, 2};
  }
  bool is_fixed_point() const noexcept { return values.size() == 1; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Classification of a cycle against the two period columns.
enum class CycleKind { kDegenerate, kOneTwo, kFixedPoint, kOther };

CycleKind classify(const Cycle& cycle) noexcept;
std::string_view to_string(CycleKind kind) noexcept;

struct ScanRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t size() const noexcept { return hi - lo + 1; }
};

/// Every cycle of Z for one parameter pair. All cycle elements lie in
/// [0, absorbing_bound], cycles are sorted by minimum element, and the basin
/// sizes partition scanned_range.
struct CycleCensus {
  Params params;
  std::uint64_t absorbing_bound;
  std::vector<Cycle> cycles;
  ScanRange scanned_range;
  /// Longest preperiod over the positive part of scanned_range.
  std::size_t max_preperiod = 0;
};

/// (t+1)(t+2), the largest value f takes on a single digit (at a = t*p + 1).
std::uint64_t max_digit_step(const Params& params) noexcept;

/// m * (t+1)(t+2), an upper bound on Z over m-digit numbers.
BigNat z_upper_bound(std::uint64_t m, const Params& params);

/// The exclusive search limit used to certify the absorbing bound: every
/// n above it satisfies Z(n) < n.
std::uint64_t absorbing_scan_limit(const Params& params);

/// Least certified B >= max(k-1, max_digit_step) such that Z maps [0, B]
/// into itself and Z(n) < n for every n > B. Throws ResourceLimitError when
/// the certification scan would exceed kMaxEnumeration.
std::uint64_t absorbing_bound(const Params& params);

/// Resolves every point of the absorbing set to its terminal cycle and
/// preperiod. Built once per Params; resolve() then answers in O(1) for
/// points inside the bound and by descent for points above it.
class CycleResolver {
 public:
  static CycleResolver build(const Params& params);

  struct Resolution {
    std::uint32_t cycle_index;
    std::size_t preperiod;
  };

  const Params& params() const noexcept { return params_; }
  std::uint64_t bound() const noexcept { return bound_; }
  /// Cycles sorted by minimum element; basin sizes are left at zero.
  const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

  /// Throws std::logic_error if an orbit from above the bound fails to
  /// descend, which would falsify the absorbing-bound certificate.
  Resolution resolve(std::uint64_t n) const;

 private:
  CycleResolver(const Params& params, std::uint64_t bound)
      : params_(params), bound_(bound) {}

  Params params_;
  std::uint64_t bound_;
  std::vector<Cycle> cycles_;
  std::vector<std::uint32_t> cycle_of_;
  std::vector<std::uint32_t> preperiod_of_;
};

/// Enumerates all cycles and attributes basins over
/// [0, max(B, extra_range)].
CycleCensus cycle_census(const Params& params,
                         std::optional<std::uint64_t> extra_range = {});

/// All n in [0, absorbing_bound] with Z(n) = n, ascending.
std::vector<std::uint64_t> fixed_points(const Params& params);

struct Lemma2Violation {
  BigNat n;
  std::size_t m;
  BigNat z;
};

struct Lemma2Report {
  Params params;
  std::size_t m_max;
  std::size_t samples_per_m;
  std::uint64_t seed;
  std::uint64_t checked = 0;
  std::vector<Lemma2Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks Z(n) < k^(m-1) for m in [3, m_max]: samples_per_m seeded uniform
/// m-digit values plus the all-(k-1) and all-(t*p+1) digit patterns.
/// Requires condition (a); throws PreconditionError otherwise.
Lemma2Report verify_lemma2(const Params& params, std::size_t m_max,
                           std::size_t samples_per_m, std::uint64_t seed);

struct Counterexample {
  std::uint64_t start;
  OrbitTrace trace;
};

struct Theorem1Report {
  Params params;
  std::uint64_t n_max;
  std::uint64_t absorbing_bound;
  /// Cycles other than the degenerate 0 fixed point.
  std::vector<Cycle> positive_cycles;
  /// Smallest start in [1, n_max] whose orbit avoids {1, 2}; if none in
  /// range but a stray cycle exists, its minimum element.
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Runs every orbit from [1, n_max] and confirms each lands in {1, 2}, and
/// that no other positive cycle exists. Requires (a), (b) and (c).
Theorem1Report verify_theorem1(const Params& params, std::uint64_t n_max);

struct ClassifiedCycle {
  Cycle cycle;
  CycleKind kind;
};

struct Theorem2Report {
  Params params;
  std::uint64_t n_max;
  std::uint64_t absorbing_bound;
  std::vector<ClassifiedCycle> classification;
  /// Set when some orbit from [1, n_max] did not end in a census cycle.
  std::optional<std::string> failure;

  bool passed() const noexcept { return !failure.has_value(); }
};

/// Census with extra_range = n_max, classified against {1,2} and fixed
/// points. Requires (a).
Theorem2Report verify_theorem2(const Params& params, std::uint64_t n_max);

struct InclusiveRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

enum class Theorem1Status { kPass, kFail, kNotApplicable, kError };
std::string_view to_string(Theorem1Status status) noexcept;

struct SweepRow {
  std::uint64_t k;
  std::uint64_t p;
  /// Set for cells outside k >= 3, p >= 2; nothing else is filled then.
  std::optional<std::string> skip_reason;
  std::optional<HypothesisReport> hypothesis;
  std::uint64_t absorbing_bound = 0;
  std::vector<Cycle> cycles;
  Theorem1Status theorem1 = Theorem1Status::kNotApplicable;
  std::size_t max_transient = 0;
  /// Per-cell failure text (resource limits, counterexample summary).
  std::string note;
};

/// One row per (k, p) cell in lexicographic order. `jobs` worker threads
/// process cells independently; the result does not depend on it.
std::vector<SweepRow> sweep(InclusiveRange k_range, InclusiveRange p_range,
                            std::uint64_t n_max, unsigned jobs = 1);

}  // namespace zorbit
