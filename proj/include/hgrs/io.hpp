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

// JSON and CSV forms of code specs, matrices and scan reports.
//
// Elements are written as dlog integers with -1 for zero; code locators use
// the string "zero" instead, and both spellings are accepted on input.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hgrs/constructions.hpp"
#include "hgrs/error.hpp"
#include "hgrs/field.hpp"
#include "hgrs/grs.hpp"
#include "hgrs/linalg.hpp"
#include "hgrs/scan.hpp"

namespace hgrs {

using Json = nlohmann::ordered_json;

inline std::int64_t element_to_json(const Field& field, Element x) {
  return x.is_zero() ? -1 : static_cast<std::int64_t>(field.dlog(x));
}

inline Json locator_to_json(const Field& field, Element x) {
  if (x.is_zero()) return "zero";
  return field.dlog(x);
}

inline Element element_from_json(const Field& field, const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "zero") return field.zero();
    throw Error(ErrorCode::ParseError, "unknown element '" + j.get<std::string>() + "'");
  }
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, "element must be an integer dlog");
  const auto t = j.get<std::int64_t>();
  if (t == -1) return field.zero();
  if (t < 0 || t >= field.group_order()) {
    throw Error(ErrorCode::ParseError, "dlog " + std::to_string(t) + " out of range");
  }
  return field.power_of_theta(t);
}

inline Json elements_to_json(const Field& field, const std::vector<Element>& xs) {
  Json arr = Json::array();
  for (Element x : xs) arr.push_back(element_to_json(field, x));
  return arr;
}

inline Json matrix_to_json(const Field& field, const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Element e : m.row(r)) row.push_back(element_to_json(field, e));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json code_to_json(const Field& field, const CodeSpec& code) {
  Json j;
  j["q"] = field.q();
  j["field"] = field.record();
  Json locs = Json::array();
  for (Element a : code.locators) locs.push_back(locator_to_json(field, a));
  j["locators"] = std::move(locs);
  j["multipliers"] = elements_to_json(field, code.multipliers);
  j["k"] = code.k;
  j["extended"] = code.extended;
  return j;
}

struct LoadedCode {
  Field field;
  CodeSpec code;
};

inline LoadedCode code_from_json(const Json& j) {
  try {
    Field field = parse_field_record(j.at("field").get<std::string>());
    if (j.contains("q") && j.at("q").get<std::uint32_t>() != field.q()) {
      throw Error(ErrorCode::ParseError, "q does not match field record");
    }
    CodeSpec code;
    for (const auto& a : j.at("locators")) code.locators.push_back(element_from_json(field, a));
    for (const auto& v : j.at("multipliers")) code.multipliers.push_back(element_from_json(field, v));
    code.k = j.at("k").get<std::size_t>();
    code.extended = j.at("extended").get<bool>();
    validate(field, code);
    return {std::move(field), std::move(code)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

inline Json construction_to_json(const Field& field, const Construction& c) {
  Json j = code_to_json(field, c.code);
  j["construction"] = c.theorem;
  Json proof;
  proof["lambda"] = element_to_json(field, c.lambda);
  proof["affine_a"] = element_to_json(field, c.affine_a);
  proof["affine_b"] = element_to_json(field, c.affine_b);
  proof["multiplier_exponents"] = c.multiplier_exponents;
  if (c.s) proof["s"] = *c.s;
  j["proof"] = std::move(proof);
  return j;
}

inline Json metadata_to_json(const ScanMetadata& meta) {
  Json j;
  j["command"] = meta.command;
  Json params = Json::object();
  for (const auto& [k, v] : meta.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["timestamp"] = meta.timestamp;
  j["version"] = meta.version;
  return j;
}

inline Json scan_to_json(const Field& field, const ScanReport& report) {
  Json j;
  j["metadata"] = metadata_to_json(report.metadata);
  j["field"] = report.field_record;
  j["q"] = report.q;
  j["n"] = report.n;
  j["k"] = report.k;
  j["extended"] = report.extended;
  j["pool"] = report.pool;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row;
    row["locators"] = elements_to_json(field, e.locators);
    row["exists"] = e.exists;
    if (e.multipliers) row["multipliers"] = elements_to_json(field, *e.multipliers);
    row["gram_checked"] = e.gram_checked;
    if (e.error) row["error"] = *e.error;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["totals"] = {{"tested", report.totals.tested},
                 {"exists", report.totals.exists},
                 {"none", report.totals.none},
                 {"errors", report.totals.errors}};
  return j;
}

namespace detail {

inline std::string join_exponents(const Field& field, const std::vector<Element>& xs) {
  std::string out;
  for (Element x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(element_to_json(field, x));
  }
  return out;
}

}  // namespace detail

/// One row per subset; element lists are space-separated dlogs.
inline std::string scan_to_csv(const Field& field, const ScanReport& report) {
  std::ostringstream os;
  os << "index,locators,exists,multipliers,gram_checked,error\n";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    os << i << ',' << detail::join_exponents(field, e.locators) << ',' << (e.exists ? "true" : "false")
       << ',' << (e.multipliers ? detail::join_exponents(field, *e.multipliers) : "") << ','
       << (e.gram_checked ? "true" : "false") << ',' << (e.error ? "budget" : "") << '\n';
  }
  return os.str();
}

inline Json conjecture_to_json(const Field& field, const ConjectureReport& report) {
  Json j;
  j["field"] = report.field_record;
  j["q"] = report.q;
  j["extended"] = report.extended;
  j["bound"] = report.bound;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"pool", r.pool},
                    {"n", r.n},
                    {"tested", r.tested},
                    {"span_holds", r.span_holds},
                    {"exists", r.exists},
                    {"span_and_exists", r.span_and_exists},
                    {"counterexamples", r.counterexamples}});
  }
  j["rows"] = std::move(rows);
  Json instances = Json::array();
  for (const auto& inst : report.instances) {
    Json row;
    row["pool"] = inst.pool;
    row["locators"] = elements_to_json(field, inst.locators);
    row["span_holds"] = inst.span_holds;
    if (inst.span_target) row["span_target"] = *inst.span_target;
    row["exists"] = inst.exists;
    if (inst.multipliers) row["multipliers"] = elements_to_json(field, *inst.multipliers);
    row["counterexample"] = inst.counterexample;
    instances.push_back(std::move(row));
  }
  j["instances"] = std::move(instances);
  j["counterexamples"] = report.counterexamples;
  return j;
}

}  // namespace hgrs
