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

#include "report_format.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zorbit::report {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "text") return Format::kText;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected json, csv or text)");
}

std::string_view to_string(Format format) noexcept {
  switch (format) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kText: return "text";
  }
  return "json";
}

json envelope(std::string_view command, json params, json payload,
              std::string_view status) {
  json out = json::object();
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["params"] = std::move(params);
  out["payload"] = std::move(payload);
  out["status"] = status;
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      line += f;
      continue;
    }
    line += '"';
    for (char c : f) {
      if (c == '"') line += '"';
      line += c;
    }
    line += '"';
  }
  line += '\n';
  return line;
}

std::string join(const std::vector<std::uint64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

namespace {

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

std::vector<std::uint64_t> digit_vector(const KAdicDigits& d) {
  return {d.digits().begin(), d.digits().end()};
}

std::vector<std::uint64_t> f_vector(const KAdicDigits& d, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (Digit a : d.digits()) out.push_back(digit_step(a, p));
  return out;
}

std::string cycles_field(const std::vector<Cycle>& cycles) {
  std::string out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i > 0) out += ';';
    out += join(cycles[i].values);
  }
  return out;
}

std::string braced(const std::vector<std::uint64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string msd_first(const KAdicDigits& d) {
  if (d.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = d.size(); i-- > 0;) {
    out += std::to_string(d[i]);
    if (i > 0) out += ' ';
  }
  return out + ")";
}

}  // namespace

json orbit_steps_json(const std::vector<BigNat>& values, const Params& params) {
  json steps = json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const KAdicDigits d = to_digits(values[i], params.k());
    steps.push_back({{"step", i},
                     {"value", to_decimal(values[i])},
                     {"digits", digit_vector(d)},
                     {"f_values", f_vector(d, params.p())}});
  }
  return steps;
}

json orbit_json(const OrbitTrace& trace) {
  json cycle = json::array();
  for (const BigNat& v : trace.cycle()) cycle.push_back(to_decimal(v));
  return {{"steps", orbit_steps_json(trace.values, trace.params)},
          {"preperiod", trace.preperiod},
          {"cycle_length", trace.cycle_length},
          {"cycle", std::move(cycle)}};
}

void orbit_csv(std::ostream& out, const std::vector<BigNat>& values,
               const Params& params) {
  out << csv_row({"step", "value", "digits", "f_values"});
  for (std::size_t i = 0; i < values.size(); ++i) {
    const KAdicDigits d = to_digits(values[i], params.k());
    out << csv_row({std::to_string(i), to_decimal(values[i]),
                    join(digit_vector(d)), join(f_vector(d, params.p()))});
  }
}

void orbit_text(std::ostream& out, const OrbitTrace& trace) {
  const Params& params = trace.params;
  out << "Z-orbit of " << to_decimal(trace.values.front()) << " in base "
      << params.k() << ", p = " << params.p() << "\n";
  for (std::size_t i = 0; i < trace.values.size(); ++i) {
    const KAdicDigits d = to_digits(trace.values[i], params.k());
    out << std::string(2 + 2 * std::min<std::size_t>(i, 20), ' ') << "n" << i
        << " = " << to_decimal(trace.values[i]) << "  " << msd_first(d);
    if (i + 1 == trace.values.size()) {
      out << "  repeats n" << trace.preperiod << "\n";
      break;
    }
    const auto fs = f_vector(d, params.p());
    out << "  f:";
    if (fs.empty()) out << " 0";
    for (std::size_t j = fs.size(); j-- > 0;) {
      out << ' ' << fs[j] << (j > 0 ? " +" : "");
    }
    out << "\n";
  }
  std::vector<std::uint64_t> cycle;
  for (const BigNat& v : trace.cycle()) cycle.push_back(v.convert_to<std::uint64_t>());
  out << "preperiod " << trace.preperiod << ", cycle length "
      << trace.cycle_length << ": " << braced(cycle) << "\n";
}

json hypothesis_json(const HypothesisReport& report) {
  json c = json::array();
  for (const CViolation& v : report.c_violations) {
    c.push_back({{"q", v.q}, {"clause", to_string(v.clause)}});
  }
  return {{"k", report.params.k()},
          {"p", report.params.p()},
          {"t", report.params.t()},
          {"s", report.params.s()},
          {"a_holds", report.a_holds},
          {"b_holds", report.b_holds},
          {"b_violations", report.b_violations},
          {"c_holds", report.c_holds},
          {"c_violations", std::move(c)},
          {"all_hold", report.all_hold()}};
}

void hypothesis_csv(std::ostream& out, const HypothesisReport& report) {
  std::string c;
  for (const CViolation& v : report.c_violations) {
    if (!c.empty()) c += ';';
    c += std::to_string(v.q) + ":" + std::string(to_string(v.clause));
  }
  out << csv_row({"k", "p", "hyp_a", "hyp_b", "hyp_c", "b_violations",
                  "c_violations"});
  out << csv_row({std::to_string(report.params.k()),
                  std::to_string(report.params.p()), pass_fail(report.a_holds),
                  pass_fail(report.b_holds), pass_fail(report.c_holds),
                  join(report.b_violations, ';'), c});
}

void hypothesis_text(std::ostream& out, const HypothesisReport& report) {
  const Params& params = report.params;
  out << "k = " << params.k() << ", p = " << params.p() << "  (k = "
      << params.t() << "*" << params.p() << " + " << params.s() << " + 1)\n";
  out << "  (a) 2p-1 <= k <= 3p^2, p >= 3: " << pass_fail(report.a_holds)
      << "\n";
  out << "  (b) (q+1)(q+2) != -1 mod p:    " << pass_fail(report.b_holds);
  if (!report.b_holds) out << "  at q = " << join(report.b_violations, ' ');
  out << "\n";
  out << "  (c) congruence / equality:     " << pass_fail(report.c_holds);
  for (const CViolation& v : report.c_violations) {
    out << "  q = " << v.q << " (" << to_string(v.clause) << ")";
  }
  out << "\n";
}

json cycle_json(const Cycle& cycle) {
  return {{"values", cycle.values},
          {"length", cycle.length()},
          {"basin_size", cycle.basin_size},
          {"kind", to_string(classify(cycle))}};
}

json census_json(const CycleCensus& census) {
  json cycles = json::array();
  for (const Cycle& c : census.cycles) cycles.push_back(cycle_json(c));
  return {{"absorbing_bound", census.absorbing_bound},
          {"scanned_range", {census.scanned_range.lo, census.scanned_range.hi}},
          {"max_preperiod", census.max_preperiod},
          {"cycles", std::move(cycles)}};
}

void census_csv(std::ostream& out, const CycleCensus& census) {
  out << csv_row({"k", "p", "absorbing_bound", "cycle", "length",
                  "basin_size", "kind"});
  for (const Cycle& c : census.cycles) {
    out << csv_row({std::to_string(census.params.k()),
                    std::to_string(census.params.p()),
                    std::to_string(census.absorbing_bound), join(c.values),
                    std::to_string(c.length()), std::to_string(c.basin_size),
                    std::string(to_string(classify(c)))});
  }
}

void census_text(std::ostream& out, const CycleCensus& census) {
  out << "k = " << census.params.k() << ", p = " << census.params.p()
      << ": absorbing bound " << census.absorbing_bound << ", scanned [0, "
      << census.scanned_range.hi << "]\n";
  for (const Cycle& c : census.cycles) {
    out << "  " << braced(c.values) << "  length " << c.length() << ", basin "
        << c.basin_size << "  " << to_string(classify(c)) << "\n";
  }
  out << "longest preperiod " << census.max_preperiod << "\n";
}

json theorem1_json(const Theorem1Report& report) {
  json cycles = json::array();
  for (const Cycle& c : report.positive_cycles) cycles.push_back(cycle_json(c));
  json witness = nullptr;
  if (report.counterexample) {
    witness = {{"start", std::to_string(report.counterexample->start)},
               {"orbit", orbit_json(report.counterexample->trace)}};
  }
  return {{"theorem", 1},
          {"n_max", report.n_max},
          {"absorbing_bound", report.absorbing_bound},
          {"passed", report.passed()},
          {"positive_cycles", std::move(cycles)},
          {"counterexample", std::move(witness)}};
}

json theorem2_json(const Theorem2Report& report) {
  json table = json::array();
  for (const ClassifiedCycle& c : report.classification) {
    table.push_back(cycle_json(c.cycle));
  }
  json failure = nullptr;
  if (report.failure) failure = *report.failure;
  return {{"theorem", 2},
          {"n_max", report.n_max},
          {"absorbing_bound", report.absorbing_bound},
          {"passed", report.passed()},
          {"classification", std::move(table)},
          {"failure", std::move(failure)}};
}

void theorem1_csv(std::ostream& out, const Theorem1Report& report) {
  std::vector<Cycle> cycles = report.positive_cycles;
  out << csv_row({"theorem", "k", "p", "n_max", "status", "cycles",
                  "counterexample"});
  out << csv_row({"1", std::to_string(report.params.k()),
                  std::to_string(report.params.p()),
                  std::to_string(report.n_max), pass_fail(report.passed()),
                  cycles_field(cycles),
                  report.counterexample
                      ? std::to_string(report.counterexample->start)
                      : ""});
}

void theorem2_csv(std::ostream& out, const Theorem2Report& report) {
  out << csv_row({"theorem", "k", "p", "n_max", "status", "cycle", "kind",
                  "basin_size"});
  for (const ClassifiedCycle& c : report.classification) {
    out << csv_row({"2", std::to_string(report.params.k()),
                    std::to_string(report.params.p()),
                    std::to_string(report.n_max), pass_fail(report.passed()),
                    join(c.cycle.values), std::string(to_string(c.kind)),
                    std::to_string(c.cycle.basin_size)});
  }
}

void theorem1_text(std::ostream& out, const Theorem1Report& report) {
  out << "unique {1, 2} cycle for k = " << report.params.k()
      << ", p = " << report.params.p() << ", n in [1, " << report.n_max
      << "]: " << pass_fail(report.passed()) << "\n";
  for (const Cycle& c : report.positive_cycles) {
    out << "  cycle " << braced(c.values) << "\n";
  }
  if (report.counterexample) {
    out << "counterexample:\n";
    orbit_text(out, report.counterexample->trace);
  }
}

void theorem2_text(std::ostream& out, const Theorem2Report& report) {
  out << "period columns for k = " << report.params.k()
      << ", p = " << report.params.p() << ", n in [1, " << report.n_max
      << "]: " << pass_fail(report.passed()) << "\n";
  for (const ClassifiedCycle& c : report.classification) {
    out << "  " << braced(c.cycle.values) << "  " << to_string(c.kind)
        << ", basin " << c.cycle.basin_size << "\n";
  }
  if (report.failure) out << "failure: " << *report.failure << "\n";
}

const std::vector<std::string>& sweep_csv_header() {
  static const std::vector<std::string> header{
      "k",          "p",           "hyp_a",  "hyp_b",
      "hyp_c",      "absorbing_bound", "num_cycles", "cycles",
      "theorem1_status", "max_transient"};
  return header;
}

std::string_view sweep_status(const SweepRow& row) noexcept {
  return row.skip_reason ? std::string_view("skipped")
                         : to_string(row.theorem1);
}

std::vector<std::string> sweep_csv_fields(const SweepRow& row) {
  if (row.skip_reason) {
    return {std::to_string(row.k), std::to_string(row.p), "", "", "", "", "",
            "", "skipped", ""};
  }
  const HypothesisReport& h = *row.hypothesis;
  return {std::to_string(row.k),
          std::to_string(row.p),
          pass_fail(h.a_holds),
          pass_fail(h.b_holds),
          pass_fail(h.c_holds),
          std::to_string(row.absorbing_bound),
          std::to_string(row.cycles.size()),
          cycles_field(row.cycles),
          std::string(sweep_status(row)),
          std::to_string(row.max_transient)};
}

json sweep_row_json(const SweepRow& row) {
  json out = {{"k", row.k}, {"p", row.p},
              {"theorem1_status", sweep_status(row)}};
  if (row.skip_reason) {
    out["skip_reason"] = *row.skip_reason;
    return out;
  }
  const HypothesisReport& h = *row.hypothesis;
  json cycles = json::array();
  for (const Cycle& c : row.cycles) cycles.push_back(c.values);
  out["hyp_a"] = pass_fail(h.a_holds);
  out["hyp_b"] = pass_fail(h.b_holds);
  out["hyp_c"] = pass_fail(h.c_holds);
  out["absorbing_bound"] = row.absorbing_bound;
  out["num_cycles"] = row.cycles.size();
  out["cycles"] = std::move(cycles);
  out["max_transient"] = row.max_transient;
  if (!row.note.empty()) out["note"] = row.note;
  return out;
}

void sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << csv_row(sweep_csv_header());
  for (const SweepRow& row : rows) out << csv_row(sweep_csv_fields(row));
}

void sweep_text(std::ostream& out, const std::vector<SweepRow>& rows) {
  for (const SweepRow& row : rows) {
    out << "k=" << row.k << " p=" << row.p << "  ";
    if (row.skip_reason) {
      out << "skipped: " << *row.skip_reason << "\n";
      continue;
    }
    const HypothesisReport& h = *row.hypothesis;
    out << "a=" << pass_fail(h.a_holds) << " b=" << pass_fail(h.b_holds)
        << " c=" << pass_fail(h.c_holds) << "  B=" << row.absorbing_bound
        << "  cycles";
    for (const Cycle& c : row.cycles) out << ' ' << braced(c.values);
    out << "  theorem1=" << sweep_status(row);
    if (!row.note.empty()) out << " (" << row.note << ")";
    out << "\n";
  }
}

}  // namespace zorbit::report
