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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zorbit/dynamics.hpp"
#include "zorbit/hypothesis.hpp"
#include "zorbit/transform.hpp"

namespace zorbit::report {

enum class Format { kJson, kCsv, kText };

Format parse_format(std::string_view name);
std::string_view to_string(Format format) noexcept;

inline constexpr std::string_view kSchemaVersion = "1";

/// {schema_version, command, params, payload, status}
nlohmann::json envelope(std::string_view command, nlohmann::json params,
                        nlohmann::json payload, std::string_view status);

/// One CSV record; fields containing ',', '"' or newlines are quoted.
std::string csv_row(const std::vector<std::string>& fields);

/// Elements joined with `sep`, e.g. "1,2".
std::string join(const std::vector<std::uint64_t>& values, char sep = ',');

nlohmann::json orbit_steps_json(const std::vector<BigNat>& values,
                                const Params& params);
nlohmann::json orbit_json(const OrbitTrace& trace);
void orbit_csv(std::ostream& out, const std::vector<BigNat>& values,
               const Params& params);
void orbit_text(std::ostream& out, const OrbitTrace& trace);

nlohmann::json hypothesis_json(const HypothesisReport& report);
void hypothesis_csv(std::ostream& out, const HypothesisReport& report);
void hypothesis_text(std::ostream& out, const HypothesisReport& report);

nlohmann::json cycle_json(const Cycle& cycle);
nlohmann::json census_json(const CycleCensus& census);
void census_csv(std::ostream& out, const CycleCensus& census);
void census_text(std::ostream& out, const CycleCensus& census);

nlohmann::json theorem1_json(const Theorem1Report& report);
nlohmann::json theorem2_json(const Theorem2Report& report);
void theorem1_csv(std::ostream& out, const Theorem1Report& report);
void theorem2_csv(std::ostream& out, const Theorem2Report& report);
void theorem1_text(std::ostream& out, const Theorem1Report& report);
void theorem2_text(std::ostream& out, const Theorem2Report& report);

/// Header for sweep CSV output, in column order.
const std::vector<std::string>& sweep_csv_header();
std::vector<std::string> sweep_csv_fields(const SweepRow& row);
std::string_view sweep_status(const SweepRow& row) noexcept;
nlohmann::json sweep_row_json(const SweepRow& row);
void sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void sweep_text(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace zorbit::report
