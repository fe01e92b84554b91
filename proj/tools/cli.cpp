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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "report_format.hpp"
#include "zorbit/dynamics.hpp"
#include "zorbit/errors.hpp"
#include "zorbit/hypothesis.hpp"
#include "zorbit/transform.hpp"

namespace zorbit::cli {
namespace {

using nlohmann::json;
using report::Format;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags a subcommand may take from --config when absent on the command line.
struct SharedOptions {
  CLI::Option* k = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* n_max = nullptr;
  CLI::Option* format = nullptr;
};

struct Settings {
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t n_max = 0;
  std::string format = "json";
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// key = value lines; '#' starts a comment; values may be double-quoted.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(number) +
                       ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    std::replace(key.begin(), key.end(), '_', '-');
    if (key != "k" && key != "p" && key != "n-max" && key != "format") {
      throw UsageError(path + ":" + std::to_string(number) +
                       ": unknown key '" + key + "'");
    }
    out[key] = value;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::uint64_t value = 0;
  if (!CLI::detail::lexical_cast(text, value) || text.empty() ||
      text.front() == '-') {
    throw UsageError("config value for " + key + " is not a nonnegative "
                     "integer: '" + text + "'");
  }
  return value;
}

void apply_config(const std::map<std::string, std::string>& config,
                  const SharedOptions& opts, Settings& s) {
  for (const auto& [key, value] : config) {
    if (key == "k" && opts.k && opts.k->count() == 0) {
      s.k = parse_u64(key, value);
    } else if (key == "p" && opts.p && opts.p->count() == 0) {
      s.p = parse_u64(key, value);
    } else if (key == "n-max" && opts.n_max && opts.n_max->count() == 0) {
      s.n_max = parse_u64(key, value);
    } else if (key == "format" && opts.format && opts.format->count() == 0) {
      s.format = value;
    }
  }
}

Params resolve_params(const SharedOptions& opts, const Settings& s) {
  if ((opts.k->count() == 0 && s.k == 0) ||
      (opts.p->count() == 0 && s.p == 0)) {
    throw UsageError("--k and --p are required (on the command line or in "
                     "--config)");
  }
  try {
    return Params::create(s.k, s.p);
  } catch (const ParameterDomainError& e) {
    throw UsageError(e.what());
  }
}

Format resolve_format(const Settings& s) {
  try {
    return report::parse_format(s.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

json params_echo(const Params& params) {
  return {{"k", params.k()}, {"p", params.p()}};
}

void emit(std::ostream& out, const json& envelope) {
  out << envelope.dump(2) << "\n";
}

int cmd_orbit(const std::string& start_text, std::size_t max_steps,
              const Params& params, Format format, std::ostream& out,
              std::ostream& err) {
  BigNat start;
  try {
    start = parse_decimal(start_text);
  } catch (const ParameterDomainError& e) {
    throw UsageError(e.what());
  }
  if (max_steps == 0) throw UsageError("--max-steps must be at least 1");
  json echo = params_echo(params);
  echo["n"] = to_decimal(start);
  echo["max_steps"] = max_steps;

  try {
    const OrbitTrace trace = orbit(start, params, max_steps);
    switch (format) {
      case Format::kJson:
        emit(out, report::envelope("orbit", echo, report::orbit_json(trace),
                                   "ok"));
        break;
      case Format::kCsv:
        report::orbit_csv(out, trace.values, params);
        break;
      case Format::kText:
        report::orbit_text(out, trace);
        break;
    }
    return kOk;
  } catch (const IterationBudgetExceeded& e) {
    err << "zorbit: " << e.what() << "\n";
    switch (format) {
      case Format::kJson: {
        json payload = {{"error", e.what()},
                        {"steps", report::orbit_steps_json(e.partial_values(),
                                                           params)}};
        emit(out, report::envelope("orbit", echo, std::move(payload),
                                   "verification_failed"));
        break;
      }
      case Format::kCsv:
      case Format::kText:
        report::orbit_csv(out, e.partial_values(), params);
        break;
    }
    return kVerificationFailed;
  }
}

int cmd_check(const Params& params, Format format, std::ostream& out) {
  const HypothesisReport hyp = check_all(params);
  switch (format) {
    case Format::kJson:
      emit(out, report::envelope("check", params_echo(params),
                                 report::hypothesis_json(hyp),
                                 hyp.all_hold() ? "ok" : "verification_failed"));
      break;
    case Format::kCsv:
      report::hypothesis_csv(out, hyp);
      break;
    case Format::kText:
      report::hypothesis_text(out, hyp);
      break;
  }
  return hyp.all_hold() ? kOk : kVerificationFailed;
}

int cmd_census(const Params& params, std::optional<std::uint64_t> n_max,
               Format format, std::ostream& out) {
  const CycleCensus census = cycle_census(params, n_max);
  json echo = params_echo(params);
  echo["n_max"] = n_max ? json(*n_max) : json(nullptr);
  switch (format) {
    case Format::kJson:
      emit(out, report::envelope("census", echo, report::census_json(census),
                                 "ok"));
      break;
    case Format::kCsv:
      report::census_csv(out, census);
      break;
    case Format::kText:
      report::census_text(out, census);
      break;
  }
  return kOk;
}

int cmd_verify(int theorem, const Params& params, std::uint64_t n_max,
               Format format, std::ostream& out, std::ostream& err) {
  json echo = params_echo(params);
  echo["theorem"] = theorem;
  echo["n_max"] = n_max;
  try {
    bool passed = false;
    json payload;
    std::ostringstream flat;
    if (theorem == 1) {
      const Theorem1Report r = verify_theorem1(params, n_max);
      passed = r.passed();
      payload = report::theorem1_json(r);
      if (format == Format::kCsv) report::theorem1_csv(flat, r);
      if (format == Format::kText) report::theorem1_text(flat, r);
    } else {
      const Theorem2Report r = verify_theorem2(params, n_max);
      passed = r.passed();
      payload = report::theorem2_json(r);
      if (format == Format::kCsv) report::theorem2_csv(flat, r);
      if (format == Format::kText) report::theorem2_text(flat, r);
    }
    if (format == Format::kJson) {
      emit(out, report::envelope("verify", echo, std::move(payload),
                                 passed ? "ok" : "verification_failed"));
    } else {
      out << flat.str();
    }
    return passed ? kOk : kVerificationFailed;
  } catch (const PreconditionError& e) {
    err << "zorbit: precondition failed: " << e.what() << "\n";
    json payload = {{"theorem", theorem},
                    {"failed_conditions", e.failed_conditions()},
                    {"message", e.what()},
                    {"hypothesis", report::hypothesis_json(check_all(params))}};
    switch (format) {
      case Format::kJson:
        emit(out, report::envelope("verify", echo, std::move(payload),
                                   "precondition_failed"));
        break;
      case Format::kCsv:
        out << report::csv_row({"theorem", "k", "p", "status",
                                "failed_conditions"});
        {
          std::string failed;
          for (const auto& c : e.failed_conditions()) {
            failed += (failed.empty() ? "" : ";") + c;
          }
          out << report::csv_row({std::to_string(theorem),
                                  std::to_string(params.k()),
                                  std::to_string(params.p()),
                                  "precondition_failed", failed});
        }
        break;
      case Format::kText:
        out << "precondition failed: " << e.what() << "\n";
        break;
    }
    return kPreconditionFailed;
  }
}

InclusiveRange parse_range(const std::string& flag, const std::string& text) {
  const auto colon = text.find(':');
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  if (colon == std::string::npos || text.find('-') != std::string::npos ||
      !CLI::detail::lexical_cast(text.substr(0, colon), lo) ||
      !CLI::detail::lexical_cast(text.substr(colon + 1), hi) || colon == 0 ||
      colon + 1 == text.size()) {
    throw UsageError(flag + " expects A:B with nonnegative integers, got '" +
                     text + "'");
  }
  if (lo > hi) throw UsageError(flag + " needs A <= B, got '" + text + "'");
  return {lo, hi};
}

int cmd_sweep(const std::string& k_text, const std::string& p_text,
              std::uint64_t n_max, unsigned jobs,
              const std::optional<std::string>& out_path, Format format,
              std::ostream& out) {
  const InclusiveRange k_range = parse_range("--k-range", k_text);
  const InclusiveRange p_range = parse_range("--p-range", p_text);
  if (jobs == 0) throw UsageError("--jobs must be at least 1");

  std::ofstream file;
  if (out_path) {
    file.open(*out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + *out_path + "'");
  }
  std::ostream& sink = out_path ? static_cast<std::ostream&>(file) : out;

  const std::vector<SweepRow> rows = sweep(k_range, p_range, n_max, jobs);
  bool all_pass = true;
  for (const SweepRow& r : rows) {
    if (r.hypothesis && r.hypothesis->all_hold() &&
        r.theorem1 != Theorem1Status::kPass) {
      all_pass = false;
    }
  }
  switch (format) {
    case Format::kJson: {
      json list = json::array();
      for (const SweepRow& r : rows) list.push_back(report::sweep_row_json(r));
      json echo = {{"k_range", {k_range.lo, k_range.hi}},
                   {"p_range", {p_range.lo, p_range.hi}},
                   {"n_max", n_max}};
      emit(sink, report::envelope("sweep", echo, {{"rows", std::move(list)}},
                                  all_pass ? "ok" : "verification_failed"));
      break;
    }
    case Format::kCsv:
      report::sweep_csv(sink, rows);
      break;
    case Format::kText:
      report::sweep_text(sink, rows);
      break;
  }
  sink.flush();
  if (out_path && !file) throw UsageError("failed writing '" + *out_path + "'");
  return all_pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Explore the k-adic Z-transformation: orbits, hypothesis "
               "checks, cycle censuses and exhaustive verification.",
               "zorbit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path,
                 "key = value file with defaults for k, p, n-max, format");

  Settings s;
  std::map<std::string, SharedOptions> shared;
  auto add_shared = [&](CLI::App* sub, bool with_n_max) {
    SharedOptions o;
    o.k = sub->add_option("--k", s.k, "base k (>= 3)");
    o.p = sub->add_option("--p", s.p, "modulus p (>= 2)");
    if (with_n_max) {
      o.n_max = sub->add_option("--n-max", s.n_max, "largest start value");
    }
    o.format = sub->add_option("--format", s.format, "json, csv or text");
    shared[sub->get_name()] = o;
  };

  std::string start_text;
  std::size_t max_steps = kDefaultMaxSteps;
  auto* orbit_cmd = app.add_subcommand("orbit", "trace one Z-orbit");
  orbit_cmd->add_option("n", start_text, "start value (decimal)")->required();
  orbit_cmd
      ->add_option("--max-steps", max_steps, "Z-step budget")
      ->envname("ZORBIT_MAX_STEPS");
  add_shared(orbit_cmd, false);

  auto* check_cmd = app.add_subcommand("check", "test conditions (a)-(c)");
  add_shared(check_cmd, false);

  auto* census_cmd = app.add_subcommand("census", "enumerate every cycle");
  add_shared(census_cmd, true);

  int theorem = 1;
  auto* verify_cmd =
      app.add_subcommand("verify", "exhaustively check a period-column claim");
  verify_cmd->add_option("--theorem", theorem, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  add_shared(verify_cmd, true);

  std::string k_text;
  std::string p_text;
  unsigned jobs = 1;
  std::optional<std::string> out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "batch over a (k, p) grid");
  sweep_cmd->add_option("--k-range", k_text, "A:B inclusive")->required();
  sweep_cmd->add_option("--p-range", p_text, "C:D inclusive")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker threads");
  sweep_cmd->add_option("--out", out_path, "write the table to FILE");
  add_shared(sweep_cmd, true);
  shared["sweep"].k = nullptr;
  shared["sweep"].p = nullptr;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zorbit: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const SharedOptions& opts = shared.at(name);
    if (!config_path.empty()) apply_config(read_config(config_path), opts, s);
    const Format format = resolve_format(s);
    const bool n_max_given =
        opts.n_max && (opts.n_max->count() > 0 || s.n_max != 0);

    if (name == "sweep") {
      return cmd_sweep(k_text, p_text, n_max_given ? s.n_max : 10'000, jobs,
                       out_path, format, out);
    }
    const Params params = resolve_params(opts, s);
    if (name == "orbit") {
      return cmd_orbit(start_text, max_steps, params, format, out, err);
    }
    if (name == "check") return cmd_check(params, format, out);
    if (name == "census") {
      return cmd_census(params, n_max_given ? std::optional(s.n_max)
                                            : std::nullopt,
                        format, out);
    }
    return cmd_verify(theorem, params, n_max_given ? s.n_max : 10'000, format,
                      out, err);
  } catch (const UsageError& e) {
    err << "zorbit: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "zorbit: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParameterDomainError& e) {
    err << "zorbit: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace zorbit::cli
