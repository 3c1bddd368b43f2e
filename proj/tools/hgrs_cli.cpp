// Copyright 2026 The hermitian-grs Authors.
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

// hgrs: construct, verify and search Hermitian self-dual (extended) GRS codes.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
// error, 3 budget exceeded.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgrs/hgrs.hpp"

namespace {

using hgrs::Element;
using hgrs::Error;
using hgrs::ErrorCode;
using hgrs::Field;
using hgrs::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

#ifndef HGRS_VERSION
#define HGRS_VERSION "dev"
#endif

Field field_for_q(std::uint32_t q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned m = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) break;
    return Field(p, m);
  }
  throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
}

Element parse_element(const Field& field, const std::string& text) {
  if (text == "zero" || text == "-1") return field.zero();
  try {
    std::size_t used = 0;
    const long long t = std::stoll(text, &used);
    if (used == text.size() && t >= 0 && t < field.group_order()) return field.power_of_theta(t);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "'" + text + "' is not a dlog in 0.." +
                                         std::to_string(field.group_order() - 1) + " or 'zero'");
}

std::vector<Element> parse_elements(const Field& field, const std::vector<std::string>& texts) {
  std::vector<Element> out;
  for (const auto& t : texts) out.push_back(parse_element(field, t));
  return out;
}

std::string set_string(const Field& field, std::vector<Element> xs, bool by_dlog = true) {
  if (by_dlog) {
    std::sort(xs.begin(), xs.end(), [&](Element a, Element b) {
      if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
      return field.dlog(a) < field.dlog(b);
    });
  }
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += field.format(xs[i]);
  }
  return out + "}";
}

std::string vector_string(const Field& field, const std::vector<Element>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += field.format(xs[i]);
  }
  return out + ")";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------- field

struct FieldArgs {
  unsigned p = 0;
  unsigned m = 0;
  std::int64_t beta_m = 1;
  bool tables = false;
  bool json = false;
};

int run_field(const FieldArgs& args) {
  const Field field(args.p, args.m);
  const auto v = field.trace_zero_set().elements;
  Json j;
  j["record"] = field.record();
  j["p"] = field.characteristic();
  j["m"] = field.extension_degree();
  j["q"] = field.q();
  j["order"] = field.order();
  j["V"] = hgrs::elements_to_json(field, v);

  std::ostringstream text;
  text << "field    " << field.record() << "\n"
       << "q        " << field.q() << "  (F_" << field.order() << ", theta = x mod modulus)\n"
       << "V        " << set_string(field, v) << "\n";

  Json fam_b = Json::array();
  for (std::size_t l = 1; l <= field.q(); ++l) {
    const auto b = hgrs::family_B(field, l);
    fam_b.push_back(hgrs::elements_to_json(field, b.elements));
    text << "B_" << l << "      " << set_string(field, b.elements) << "\n";
  }
  j["B"] = std::move(fam_b);

  const bool m_valid = hgrs::coset_multiplier_valid(field, field.power_of_theta(args.beta_m));
  j["beta_m"] = args.beta_m;
  if (m_valid) {
    Json fam_blm = Json::array();
    for (std::size_t l = 1; l <= field.q(); ++l) {
      const auto b = hgrs::family_Blm(field, l, args.beta_m);
      fam_blm.push_back(hgrs::elements_to_json(field, b.elements));
      text << "B_{" << l << "," << args.beta_m << "}  " << set_string(field, b.elements) << "\n";
    }
    j["B_lm"] = std::move(fam_blm);
  } else {
    text << "B_{l," << args.beta_m << "}  invalid: theta^" << args.beta_m << " a_l lies in V*\n";
    j["B_lm"] = nullptr;
  }

  if (args.tables) {
    Json rows = Json::array();
    text << "\nx        trace    norm     frobenius\n";
    for (Element x : field.elements()) {
      rows.push_back({hgrs::element_to_json(field, x), hgrs::element_to_json(field, field.trace(x)),
                      hgrs::element_to_json(field, field.norm(x)),
                      hgrs::element_to_json(field, field.frobenius(x))});
      text << std::left << std::setw(9) << field.format(x) << std::setw(9) << field.format(field.trace(x))
           << std::setw(9) << field.format(field.norm(x)) << field.format(field.frobenius(x)) << "\n";
    }
    j["tables"] = std::move(rows);
  }
  std::cout << (args.json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

// ------------------------------------------------------------ construct

struct Verification {
  bool gram_zero = false;
  bool mds = false;
  bool lemma = false;
  bool all() const { return gram_zero && mds && lemma; }
};

Verification verify_code(const Field& field, const hgrs::CodeSpec& code, const hgrs::MdsLimits& limits) {
  return {hgrs::criterion_direct(field, code), hgrs::is_mds(field, code, limits),
          hgrs::criterion_lemma(field, code)};
}

Json verification_json(const Verification& v) {
  return {{"gram_zero", v.gram_zero}, {"mds", v.mds}, {"lemma_criterion", v.lemma}};
}

std::string code_params(const hgrs::CodeSpec& code) {
  const std::size_t len = code.length();
  return "[" + std::to_string(len) + "," + std::to_string(code.k) + "," +
         std::to_string(len - code.k + 1) + "]";
}

struct ConstructArgs {
  int theorem = 0;
  std::uint32_t q = 0;
  std::int64_t e = 0;
  std::string b = "zero";
  std::size_t l = 1;
  std::int64_t m = 1;
  std::size_t n = 0;
  bool extended = false;
  std::vector<std::string> locators;
  bool json = false;
  std::string out;
  hgrs::MdsLimits mds;
};

int run_construct(const ConstructArgs& args) {
  const Field field = field_for_q(args.q);
  std::optional<std::vector<Element>> locs;
  if (!args.locators.empty()) locs = parse_elements(field, args.locators);
  hgrs::Construction c;
  switch (args.theorem) {
    case 1:
      c = hgrs::construct_theorem1(field, args.e, parse_element(field, args.b), args.n, args.extended, locs);
      break;
    case 2:
      c = hgrs::construct_theorem2(field, args.l, args.n, args.extended, locs);
      break;
    case 3:
      c = hgrs::construct_theorem3(field, args.l, args.m, args.n, args.extended, locs);
      break;
    default:
      throw Error(ErrorCode::InvalidArgument, "family must be 1, 2 or 3");
  }
  const Verification v = verify_code(field, c.code, args.mds);
  Json j = hgrs::construction_to_json(field, c);
  j["verification"] = verification_json(v);
  if (!args.out.empty()) write_file(args.out, hgrs::code_to_json(field, c.code).dump(2) + "\n");
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (c.code.extended ? "EGRS " : "GRS ") << code_params(c.code) << " over F_" << field.order()
              << "\n"
              << "locators     " << vector_string(field, c.code.locators) << "\n"
              << "multipliers  " << vector_string(field, c.code.multipliers) << "\n"
              << "gram_zero " << v.gram_zero << "  mds " << v.mds << "  lemma_criterion " << v.lemma << "\n";
  }
  return v.all() ? kExitOk : kExitNegative;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string path;
  bool json = false;
  hgrs::MdsLimits mds;
};

int run_verify(const VerifyArgs& args) {
  std::ifstream in(args.path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + args.path);
  Json parsed;
  try {
    parsed = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  const auto loaded = hgrs::code_from_json(parsed);
  const Field& field = loaded.field;
  hgrs::check_self_dual_shape(loaded.code);
  const Verification v = verify_code(field, loaded.code, args.mds);
  const bool self_dual = v.gram_zero && v.lemma;
  Json j;
  j["verdict"] = self_dual ? "self-dual" : "not self-dual";
  j["verification"] = verification_json(v);
  if (!v.gram_zero) j["gram"] = hgrs::matrix_to_json(field, hgrs::hermitian_gram(field, loaded.code));
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict " << j["verdict"].get<std::string>() << "\n"
              << "gram_zero " << v.gram_zero << "  mds " << v.mds << "  lemma_criterion " << v.lemma << "\n";
    if (!v.gram_zero) {
      const auto gram = hgrs::hermitian_gram(field, loaded.code);
      std::cout << "gram\n";
      for (std::size_t r = 0; r < gram.rows(); ++r) {
        std::vector<Element> row(gram.row(r).begin(), gram.row(r).end());
        std::cout << "  " << vector_string(field, row) << "\n";
      }
    }
  }
  return self_dual && v.mds ? kExitOk : kExitNegative;
}

// --------------------------------------------------------------- search

struct SearchArgs {
  std::uint32_t q = 0;
  std::vector<std::string> locators;
  bool extended = false;
  bool json = false;
  hgrs::SubfieldSearchLimits solver;
};

int run_search(const SearchArgs& args) {
  const Field field = field_for_q(args.q);
  const auto a = parse_elements(field, args.locators);
  const auto code = hgrs::find_multipliers(field, a, args.extended, args.solver);
  if (args.json) {
    Json j;
    j["exists"] = code.has_value();
    if (code) j["code"] = hgrs::code_to_json(field, *code);
    std::cout << j.dump(2) << "\n";
  } else if (code) {
    std::cout << "multipliers " << vector_string(field, code->multipliers) << "\n";
  } else {
    std::cout << "none\n";
  }
  return code ? kExitOk : kExitNegative;
}

// ----------------------------------------------------------------- scan

struct ScanArgs {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::string pool = "all-nonzero";
  bool extended = false;
  std::string out;
  std::string csv;
  bool no_timestamp = false;
  hgrs::ScanOptions options;
};

int run_scan(const ScanArgs& args) {
  const Field field = field_for_q(args.q);
  const auto pool = hgrs::make_pool(field, args.pool);
  auto report = hgrs::existence_scan(field, args.n, pool, args.extended, args.options);
  report.metadata.command = "scan";
  report.metadata.parameters = {{"q", std::to_string(args.q)},
                                {"n", std::to_string(args.n)},
                                {"pool", args.pool},
                                {"extended", args.extended ? "true" : "false"}};
  report.metadata.timestamp = args.no_timestamp ? "" : utc_timestamp();
  report.metadata.version = HGRS_VERSION;
  if (!args.out.empty()) {
    write_file(args.out, hgrs::scan_to_json(field, report).dump(2) + "\n");
    std::string csv = args.csv;
    if (csv.empty()) {
      csv = args.out;
      const auto dot = csv.rfind('.');
      csv = (dot == std::string::npos ? csv : csv.substr(0, dot)) + ".csv";
    }
    write_file(csv, hgrs::scan_to_csv(field, report));
  } else if (!args.csv.empty()) {
    write_file(args.csv, hgrs::scan_to_csv(field, report));
  }
  const auto& t = report.totals;
  std::cout << "q=" << args.q << " n=" << args.n << (args.extended ? " extended" : " plain")
            << " pool=" << args.pool << "  tested " << t.tested << "  exists " << t.exists << "  none "
            << t.none << "  errors " << t.errors << "\n";
  return t.errors > 0 ? kExitBudget : kExitOk;
}

// ----------------------------------------------------------- conjecture

struct ConjectureArgs {
  std::uint32_t q = 0;
  bool extended = false;
  std::vector<std::string> pools = {"subgroup", "subfield", "subfield+V"};
  std::size_t max_n = 0;
  std::string out;
  hgrs::ScanOptions options;
};

int run_conjecture(const ConjectureArgs& args) {
  const Field field = field_for_q(args.q);
  std::vector<hgrs::LocatorPool> pools;
  for (const auto& name : args.pools) pools.push_back(hgrs::make_pool(field, name));
  const std::size_t max_n = args.max_n ? args.max_n : 2 * field.q();
  const auto report = hgrs::conjecture_sweep(field, args.extended, pools, max_n, args.options);
  if (!args.out.empty()) write_file(args.out, hgrs::conjecture_to_json(field, report).dump(2) + "\n");
  std::cout << "q=" << args.q << (args.extended ? " extended" : " plain") << "  bound n <= " << report.bound
            << "\n";
  std::cout << std::left << std::setw(12) << "pool" << std::setw(4) << "n" << std::setw(8) << "tested"
            << std::setw(8) << "span" << std::setw(8) << "exists" << std::setw(8) << "both"
            << "counterexamples\n";
  for (const auto& r : report.rows) {
    std::cout << std::setw(12) << r.pool << std::setw(4) << r.n << std::setw(8) << r.tested << std::setw(8)
              << r.span_holds << std::setw(8) << r.exists << std::setw(8) << r.span_and_exists
              << r.counterexamples << "\n";
  }
  std::cout << "counterexamples " << report.counterexamples << "\n";
  return report.counterexamples == 0 ? kExitOk : kExitNegative;
}

void add_mds_flags(CLI::App* cmd, hgrs::MdsLimits& limits) {
  cmd->add_option("--codeword-budget", limits.codeword_budget, "Max messages for brute-force distance");
  cmd->add_option("--minor-budget", limits.minor_budget, "Max maximal minors examined");
}

void add_scan_flags(CLI::App* cmd, hgrs::ScanOptions& options) {
  cmd->add_option("--workers", options.workers, "Worker threads");
  cmd->add_option("--subset-budget", options.subset_budget, "Max locator subsets");
  cmd->add_option("--coset-budget", options.solver.budget, "Max coset points per subset");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian self-dual (extended) GRS codes over F_{q^2}"};
  app.set_version_flag("--version", HGRS_VERSION);
  app.require_subcommand(1);

  FieldArgs field_args;
  auto* field_cmd = app.add_subcommand("field", "Print the field record, V and the B_l, B_{l,m} families");
  field_cmd->add_option("p", field_args.p, "Characteristic")->required();
  field_cmd->add_option("m", field_args.m, "q = p^m")->required();
  field_cmd->add_option("--beta-m", field_args.beta_m, "Exponent m of beta_m = theta^m");
  field_cmd->add_flag("--tables", field_args.tables, "Print trace, norm and Frobenius tables");
  field_cmd->add_flag("--json", field_args.json, "JSON output");

  ConstructArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build a code from family S (1), B_l (2) or B_{l,m} (3)");
  construct_cmd->add_option("family", construct_args.theorem, "1 (S), 2 (B_l) or 3 (B_{l,m})")->required()->check(CLI::Range(1, 3));
  construct_cmd->add_option("--q", construct_args.q, "Subfield order q")->required();
  construct_cmd->add_option("--n", construct_args.n, "Number of locators")->required();
  construct_cmd->add_option("--e", construct_args.e, "Family S: a = theta^e");
  construct_cmd->add_option("--b", construct_args.b, "Family S: b as dlog or 'zero'");
  construct_cmd->add_option("--l", construct_args.l, "Family index l (1..q)");
  construct_cmd->add_option("--m", construct_args.m, "Family B_{l,m}: beta_m = theta^m");
  construct_cmd->add_flag("--extended", construct_args.extended, "Extended GRS code");
  construct_cmd->add_option("--locators", construct_args.locators, "Explicit locators (dlogs or 'zero')");
  construct_cmd->add_option("--out", construct_args.out, "Write the CodeSpec JSON here");
  construct_cmd->add_flag("--json", construct_args.json, "JSON output");
  add_mds_flags(construct_cmd, construct_args.mds);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a CodeSpec JSON file");
  verify_cmd->add_option("codespec", verify_args.path, "CodeSpec JSON file")->required();
  verify_cmd->add_flag("--json", verify_args.json, "JSON output");
  add_mds_flags(verify_cmd, verify_args.mds);

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Find multipliers for explicit locators");
  search_cmd->add_option("--q", search_args.q, "Subfield order q")->required();
  search_cmd->add_option("locators", search_args.locators, "Locators (dlogs or 'zero')")->required();
  search_cmd->add_flag("--extended", search_args.extended, "Extended GRS code");
  search_cmd->add_flag("--json", search_args.json, "JSON output");
  search_cmd->add_option("--coset-budget", search_args.solver.budget, "Max coset points");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive existence scan over locator subsets");
  scan_cmd->add_option("--q", scan_args.q, "Subfield order q")->required();
  scan_cmd->add_option("--n", scan_args.n, "Subset size")->required();
  scan_cmd->add_option("--pool", scan_args.pool,
                       "all | all-nonzero | subgroup | subfield | V | subfield+V | B:l | Blm:l:m | S:e:b");
  scan_cmd->add_flag("--extended", scan_args.extended, "Extended GRS codes");
  scan_cmd->add_option("--out", scan_args.out, "JSON report path (CSV written alongside)");
  scan_cmd->add_option("--csv", scan_args.csv, "CSV report path");
  scan_cmd->add_flag("--no-timestamp", scan_args.no_timestamp, "Leave the timestamp empty");
  add_scan_flags(scan_cmd, scan_args.options);

  ConjectureArgs conj_args;
  auto* conj_cmd = app.add_subcommand("conjecture", "Sweep span condition and existence over locator pools");
  conj_cmd->add_option("--q", conj_args.q, "Subfield order q")->required();
  conj_cmd->add_flag("--extended", conj_args.extended, "Extended GRS codes");
  conj_cmd->add_option("--pools", conj_args.pools, "Pool names")->delimiter(',');
  conj_cmd->add_option("--max-n", conj_args.max_n, "Largest n (default 2q)");
  conj_cmd->add_option("--out", conj_args.out, "JSON report path");
  add_scan_flags(conj_cmd, conj_args.options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*field_cmd) return run_field(field_args);
    if (*construct_cmd) return run_construct(construct_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*search_cmd) return run_search(search_args);
    if (*scan_cmd) return run_scan(scan_args);
    if (*conj_cmd) return run_conjecture(conj_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hgrs::is_budget_error(e.code()) ? kExitBudget : kExitInput;
  }
  return kExitInput;
}
