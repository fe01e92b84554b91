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

#include "zorbit/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "zorbit/errors.hpp"
#include "zorbit/random.hpp"

namespace zorbit {
namespace {

using u128 = unsigned __int128;

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kOnPath = kUnvisited - 1;

std::uint64_t z_small(std::uint64_t n, const Params& params) {
  return z_transform(n, params);
}

void rotate_to_min(std::vector<std::uint64_t>& values) {
  std::rotate(values.begin(), std::min_element(values.begin(), values.end()),
              values.end());
}

Theorem1Report theorem1_from(const CycleResolver& resolver,
                             std::uint64_t n_max) {
  const Params& params = resolver.params();
  Theorem1Report report{params, n_max, resolver.bound(), {}, std::nullopt};
  std::optional<std::uint32_t> one_two;
  for (std::uint32_t i = 0; i < resolver.cycles().size(); ++i) {
    const Cycle& c = resolver.cycles()[i];
    if (c.is_degenerate()) continue;
    report.positive_cycles.push_back(c);
    if (c.is_one_two()) one_two = i;
  }
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (resolver.resolve(n).cycle_index != one_two) {
      report.counterexample = Counterexample{n, orbit(n, params)};
      return report;
    }
  }
  for (const Cycle& c : report.positive_cycles) {
    if (!c.is_one_two()) {
      report.counterexample = Counterexample{c.min(), orbit(c.min(), params)};
      break;
    }
  }
  return report;
}

CycleCensus census_from(const CycleResolver& resolver,
                        std::optional<std::uint64_t> extra_range) {
  const std::uint64_t hi = std::max(resolver.bound(), extra_range.value_or(0));
  CycleCensus census{resolver.params(), resolver.bound(), resolver.cycles(),
                     ScanRange{0, hi}, 0};
  for (std::uint64_t n = 0;; ++n) {
    const auto r = resolver.resolve(n);
    ++census.cycles[r.cycle_index].basin_size;
    if (n > 0) census.max_preperiod = std::max(census.max_preperiod, r.preperiod);
    if (n == hi) break;
  }
  return census;
}

}  // namespace

CycleKind classify(const Cycle& cycle) noexcept {
  if (cycle.is_degenerate()) return CycleKind::kDegenerate;
  if (cycle.is_one_two()) return CycleKind::kOneTwo;
  if (cycle.is_fixed_point()) return CycleKind::kFixedPoint;
  return CycleKind::kOther;
}

std::string_view to_string(CycleKind kind) noexcept {
  switch (kind) {
    case CycleKind::kDegenerate: return "degenerate";
    case CycleKind::kOneTwo: return "one_two";
    case CycleKind::kFixedPoint: return "fixed_point";
    case CycleKind::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(Theorem1Status status) noexcept {
  switch (status) {
    case Theorem1Status::kPass: return "pass";
    case Theorem1Status::kFail: return "fail";
    case Theorem1Status::kNotApplicable: return "n/a";
    case Theorem1Status::kError: return "error";
  }
  return "error";
}

std::uint64_t max_digit_step(const Params& params) noexcept {
  // t <= (2^32 - 2) / 2, so the product stays below 2^63.
  return (params.t() + 1) * (params.t() + 2);
}

BigNat z_upper_bound(std::uint64_t m, const Params& params) {
  return BigNat(m) * max_digit_step(params);
}

std::uint64_t absorbing_scan_limit(const Params& params) {
  // For an m-digit n, Z(n) <= m*M. Only n <= min(k^m - 1, m*M) can then
  // satisfy Z(n) >= n, and once k^(m-1) > m*M no m-digit n can. Since
  // m*M / k^(m-1) is decreasing in m, the first such m ends the search.
  const u128 k = params.k();
  const u128 top = max_digit_step(params);
  u128 power = 1;  // k^(m-1)
  u128 limit = 0;
  for (u128 m = 1; power <= m * top; ++m) {
    limit = std::max(limit, std::min(power * k - 1, m * top));
    power *= k;
  }
  if (limit > kMaxEnumeration) {
    throw ResourceLimitError("absorbing-bound certification for k=" +
                             std::to_string(params.k()) +
                             ", p=" + std::to_string(params.p()) +
                             " exceeds the enumeration limit");
  }
  return static_cast<std::uint64_t>(limit);
}

std::uint64_t absorbing_bound(const Params& params) {
  const std::uint64_t limit = absorbing_scan_limit(params);
  // Last n that does not strictly decrease. n = 1 always qualifies.
  std::uint64_t last_rise = 1;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (z_small(n, params) >= n) last_rise = n;
  }
  // Above last_rise every step strictly decreases, so [0, B] is closed as
  // soon as B covers the images of [0, last_rise].
  std::uint64_t bound = std::max({params.k() - 1, max_digit_step(params),
                                  last_rise});
  for (std::uint64_t n = 0; n <= last_rise; ++n) {
    bound = std::max(bound, z_small(n, params));
  }
  if (bound > kMaxEnumeration) {
    throw ResourceLimitError("absorbing bound " + std::to_string(bound) +
                             " exceeds the enumeration limit");
  }
  return bound;
}

CycleResolver CycleResolver::build(const Params& params) {
  CycleResolver g(params, absorbing_bound(params));
  const std::uint64_t bound = g.bound_;
  g.cycle_of_.assign(bound + 1, kUnvisited);
  g.preperiod_of_.assign(bound + 1, 0);

  std::vector<std::uint64_t> path;
  for (std::uint64_t start = 0; start <= bound; ++start) {
    if (g.cycle_of_[start] != kUnvisited) continue;
    path.clear();
    std::uint64_t x = start;
    while (g.cycle_of_[x] == kUnvisited) {
      g.cycle_of_[x] = kOnPath;
      g.preperiod_of_[x] = static_cast<std::uint32_t>(path.size());
      path.push_back(x);
      x = z_small(x, params);
      if (x > bound) {
        throw std::logic_error("Z left the absorbing set at " +
                               std::to_string(path.back()));
      }
    }
    std::uint32_t id;
    std::size_t tail;   // path[0, tail) are transient nodes
    std::uint32_t base;  // preperiod of the node the path runs into
    if (g.cycle_of_[x] == kOnPath) {
      tail = g.preperiod_of_[x];
      id = static_cast<std::uint32_t>(g.cycles_.size());
      Cycle c;
      c.values.assign(path.begin() + static_cast<std::ptrdiff_t>(tail),
                      path.end());
      rotate_to_min(c.values);
      g.cycles_.push_back(std::move(c));
      for (std::size_t i = tail; i < path.size(); ++i) {
        g.cycle_of_[path[i]] = id;
        g.preperiod_of_[path[i]] = 0;
      }
      base = 0;
    } else {
      tail = path.size();
      id = g.cycle_of_[x];
      base = g.preperiod_of_[x];
    }
    for (std::size_t i = 0; i < tail; ++i) {
      g.cycle_of_[path[i]] = id;
      g.preperiod_of_[path[i]] = base + static_cast<std::uint32_t>(tail - i);
    }
  }

  // Canonical order: by minimum element.
  std::vector<std::uint32_t> order(g.cycles_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return g.cycles_[a].min() < g.cycles_[b].min();
  });
  std::vector<std::uint32_t> remap(order.size());
  std::vector<Cycle> sorted;
  sorted.reserve(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    sorted.push_back(std::move(g.cycles_[order[i]]));
  }
  g.cycles_ = std::move(sorted);
  for (auto& id : g.cycle_of_) id = remap[id];
  return g;
}

CycleResolver::Resolution CycleResolver::resolve(std::uint64_t n) const {
  std::size_t steps = 0;
  while (n > bound_) {
    const std::uint64_t next = z_small(n, params_);
    if (next >= n) {
      throw std::logic_error("orbit of " + std::to_string(n) +
                             " does not descend toward the absorbing set");
    }
    n = next;
    ++steps;
  }
  return Resolution{cycle_of_[n], steps + preperiod_of_[n]};
}

CycleCensus cycle_census(const Params& params,
                         std::optional<std::uint64_t> extra_range) {
  return census_from(CycleResolver::build(params), extra_range);
}

std::vector<std::uint64_t> fixed_points(const Params& params) {
  const std::uint64_t bound = absorbing_bound(params);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n <= bound; ++n) {
    if (z_small(n, params) == n) out.push_back(n);
  }
  return out;
}

Lemma2Report verify_lemma2(const Params& params, std::size_t m_max,
                           std::size_t samples_per_m, std::uint64_t seed) {
  if (!check_a(params)) {
    throw PreconditionError("the digit-count bound is stated under (a)", {"a"});
  }
  Lemma2Report report{params, m_max, samples_per_m, seed, 0, {}};
  SeededRng rng(seed);
  const std::uint64_t k = params.k();
  const std::uint64_t worst_digit = params.t() * params.p() + 1;

  auto check = [&](const std::vector<Digit>& digits) {
    const BigNat n = from_digits(digits, k);
    const BigNat z = z_transform(n, params);
    const std::size_t m = digits.size();
    ++report.checked;
    if (z >= boost::multiprecision::pow(BigNat(k), static_cast<unsigned>(m - 1))) {
      report.violations.push_back({n, m, z});
    }
  };

  std::vector<Digit> digits;
  for (std::size_t m = 3; m <= m_max; ++m) {
    digits.assign(m, 0);
    for (std::size_t i = 0; i < samples_per_m; ++i) {
      for (std::size_t d = 0; d + 1 < m; ++d) digits[d] = rng.below(k);
      digits[m - 1] = rng.between(1, k - 1);
      check(digits);
    }
    check(std::vector<Digit>(m, k - 1));
    check(std::vector<Digit>(m, worst_digit));
  }
  return report;
}

Theorem1Report verify_theorem1(const Params& params, std::uint64_t n_max) {
  const HypothesisReport hyp = check_all(params);
  if (!hyp.all_hold()) {
    auto failed = hyp.failed_conditions();
    std::string names;
    for (const auto& f : failed) names += (names.empty() ? "(" : ", (") + f + ")";
    throw PreconditionError("the unique-cycle claim requires (a), (b) and (c); "
                            "failed: " + names,
                            std::move(failed));
  }
  return theorem1_from(CycleResolver::build(params), n_max);
}

Theorem2Report verify_theorem2(const Params& params, std::uint64_t n_max) {
  if (!check_a(params)) {
    throw PreconditionError("the weakened claim requires (a); failed: (a)",
                            {"a"});
  }
  const CycleResolver resolver = CycleResolver::build(params);
  Theorem2Report report{params, n_max, resolver.bound(), {}, std::nullopt};
  try {
    const CycleCensus census = census_from(resolver, n_max);
    for (const Cycle& c : census.cycles) {
      report.classification.push_back({c, classify(c)});
    }
  } catch (const std::logic_error& e) {
    report.failure = e.what();
  }
  return report;
}

std::vector<SweepRow> sweep(InclusiveRange k_range, InclusiveRange p_range,
                            std::uint64_t n_max, unsigned jobs) {
  if (k_range.lo > k_range.hi || p_range.lo > p_range.hi) {
    throw ParameterDomainError("sweep ranges must satisfy lo <= hi");
  }
  std::vector<SweepRow> rows;
  for (std::uint64_t k = k_range.lo;; ++k) {
    for (std::uint64_t p = p_range.lo;; ++p) {
      SweepRow row;
      row.k = k;
      row.p = p;
      rows.push_back(std::move(row));
      if (p == p_range.hi) break;
    }
    if (k == k_range.hi) break;
  }

  auto process = [n_max](SweepRow& row) {
    std::optional<Params> params;
    try {
      params = Params::create(row.k, row.p);
    } catch (const ParameterDomainError& e) {
      row.skip_reason = e.what();
      return;
    }
    row.hypothesis = check_all(*params);
    try {
      const CycleResolver resolver = CycleResolver::build(*params);
      const CycleCensus census = census_from(resolver, n_max);
      row.absorbing_bound = census.absorbing_bound;
      row.cycles = census.cycles;
      row.max_transient = census.max_preperiod;
      if (row.hypothesis->all_hold()) {
        const Theorem1Report t1 = theorem1_from(resolver, n_max);
        row.theorem1 = t1.passed() ? Theorem1Status::kPass
                                   : Theorem1Status::kFail;
        if (!t1.passed()) {
          row.note = "counterexample n=" +
                     std::to_string(t1.counterexample->start);
        }
      }
    } catch (const std::exception& e) {
      row.theorem1 = Theorem1Status::kError;
      row.note = e.what();
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (auto& row : rows) process(row);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
        process(rows[i]);
      }
    });
  }
  workers.clear();
  return rows;
}

}  // namespace zorbit
