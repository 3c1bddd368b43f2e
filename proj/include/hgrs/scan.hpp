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

// Exhaustive existence scans over locator subsets.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hgrs/combinatorics.hpp"
#include "hgrs/constructions.hpp"
#include "hgrs/error.hpp"
#include "hgrs/field.hpp"
#include "hgrs/grs.hpp"
#include "hgrs/selfdual.hpp"

namespace hgrs {

struct LocatorPool {
  std::string name;
  std::vector<Element> elements;  // canonical order, distinct
};

/// The multiplicative subgroup <theta^{q-1}> of order q + 1.
inline std::vector<Element> norm_one_subgroup(const Field& field) {
  std::vector<Element> out;
  for (std::uint32_t t = 0; t <= field.q(); ++t) out.push_back(field.power_of_theta(std::int64_t{t} * (field.q() - 1)));
  std::sort(out.begin(), out.end());
  return out;
}

/// Named pools: all, all-nonzero, subgroup, subfield, subfield+V, V,
/// B:<l>, Blm:<l>:<m>, S:<e>:<b-dlog or -1>.
inline LocatorPool make_pool(const Field& field, const std::string& name) {
  LocatorPool pool{name, {}};
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    return parts;
  };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + s + "' in pool " + name);
    }
  };
  const auto parts = split(name);
  if (name == "all") {
    pool.elements = field.elements();
  } else if (name == "all-nonzero") {
    pool.elements = field.nonzero_elements();
  } else if (name == "subgroup") {
    pool.elements = norm_one_subgroup(field);
  } else if (name == "subfield") {
    pool.elements = field.subfield_elements();
  } else if (name == "V") {
    pool.elements = field.trace_zero_set().elements;
  } else if (name == "subfield+V") {
    pool.elements = field.subfield_elements();
    for (Element x : field.trace_zero_set().elements) pool.elements.push_back(x);
  } else if (parts.size() == 2 && parts[0] == "B") {
    pool.elements = family_B(field, static_cast<std::size_t>(to_int(parts[1]))).elements;
  } else if (parts.size() == 3 && parts[0] == "Blm") {
    pool.elements = family_Blm(field, static_cast<std::size_t>(to_int(parts[1])), to_int(parts[2])).elements;
  } else if (parts.size() == 3 && parts[0] == "S") {
    const std::int64_t b = to_int(parts[2]);
    pool.elements = family_S(field, to_int(parts[1]), b < 0 ? field.zero() : field.power_of_theta(b)).elements;
  } else {
    throw Error(ErrorCode::ParseError, "unknown pool '" + name + "'");
  }
  std::sort(pool.elements.begin(), pool.elements.end());
  pool.elements.erase(std::unique(pool.elements.begin(), pool.elements.end()), pool.elements.end());
  return pool;
}

struct ScanEntry {
  std::vector<Element> locators;
  bool exists = false;
  std::optional<std::vector<Element>> multipliers;
  /// The witness was re-checked against the Hermitian Gram matrix.
  bool gram_checked = false;
  std::optional<std::string> error;

  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

struct ScanTotals {
  std::uint64_t tested = 0;
  std::uint64_t exists = 0;
  std::uint64_t none = 0;
  std::uint64_t errors = 0;

  friend bool operator==(const ScanTotals&, const ScanTotals&) = default;
};

struct ScanMetadata {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string timestamp;
  std::string version;
};

struct ScanReport {
  ScanMetadata metadata;
  std::string field_record;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  bool extended = false;
  std::string pool;
  std::vector<ScanEntry> entries;
  ScanTotals totals;
};

struct ScanOptions {
  unsigned workers = 1;
  std::uint64_t subset_budget = 1'000'000;
  SubfieldSearchLimits solver;
};

inline ScanTotals tally(const std::vector<ScanEntry>& entries) {
  ScanTotals t;
  for (const auto& e : entries) {
    ++t.tested;
    if (e.error) {
      ++t.errors;
    } else if (e.exists) {
      ++t.exists;
    } else {
      ++t.none;
    }
  }
  return t;
}

/// Runs `work(i)` for i in [0, count) on up to `workers` threads. The first
/// exception thrown by any worker is rethrown after all threads join.
template <class Work>
void parallel_for(std::size_t count, unsigned workers, Work&& work) {
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::vector<std::vector<Element>> subsets_of(const LocatorPool& pool, std::size_t n,
                                                    std::uint64_t budget) {
  const std::uint64_t count = binomial(pool.elements.size(), n);
  if (count > budget) {
    throw Error(ErrorCode::CombinatorialBudgetExceeded,
                "C(" + std::to_string(pool.elements.size()) + ", " + std::to_string(n) +
                    ") subsets exceed budget " + std::to_string(budget));
  }
  std::vector<std::vector<Element>> out;
  out.reserve(count);
  for_each_combination(pool.elements.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<Element> s;
    for (std::size_t i : idx) s.push_back(pool.elements[i]);
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

/// Runs find_multipliers on every n-subset of the pool (ascending canonical
/// order). Entries are ordered by subset regardless of the worker count.
inline ScanReport existence_scan(const Field& field, std::size_t n, const LocatorPool& pool,
                                 bool extended, const ScanOptions& options = {}) {
  ScanReport report;
  report.field_record = field.record();
  report.q = field.q();
  report.n = n;
  report.k = extended ? (n + 1) / 2 : n / 2;
  report.extended = extended;
  report.pool = pool.name;
  const auto subsets = subsets_of(pool, n, options.subset_budget);
  report.entries.resize(subsets.size());
  parallel_for(subsets.size(), options.workers, [&](std::size_t i) {
    ScanEntry& entry = report.entries[i];
    entry.locators = subsets[i];
    try {
      if (auto code = find_multipliers(field, subsets[i], extended, options.solver)) {
        entry.exists = true;
        entry.multipliers = code->multipliers;
        entry.gram_checked = true;
      }
    } catch (const Error& e) {
      if (!is_budget_error(e.code())) throw;
      entry.error = e.what();
    }
  });
  report.totals = tally(report.entries);
  return report;
}

struct ConjectureInstance {
  std::string pool;
  std::vector<Element> locators;
  bool span_holds = false;
  std::optional<std::int64_t> span_target;
  bool exists = false;
  std::optional<std::vector<Element>> multipliers;
  /// span condition and existence with n above the bound.
  bool counterexample = false;
};

struct ConjectureRow {
  std::string pool;
  std::size_t n = 0;
  std::uint64_t tested = 0;
  std::uint64_t span_holds = 0;
  std::uint64_t exists = 0;
  std::uint64_t span_and_exists = 0;
  std::uint64_t counterexamples = 0;
};

struct ConjectureReport {
  std::string field_record;
  std::uint32_t q = 0;
  bool extended = false;
  /// q + 1 for plain codes, q for extended codes.
  std::size_t bound = 0;
  std::vector<ConjectureRow> rows;
  std::vector<ConjectureInstance> instances;
  std::uint64_t counterexamples = 0;
};

/// For every pool and every admissible n up to max_n, checks each n-subset
/// for the span condition and for existence, flagging any subset where both
/// hold with n above the bound.
inline ConjectureReport conjecture_sweep(const Field& field, bool extended,
                                         const std::vector<LocatorPool>& pools, std::size_t max_n,
                                         const ScanOptions& options = {}) {
  ConjectureReport report;
  report.field_record = field.record();
  report.q = field.q();
  report.extended = extended;
  report.bound = extended ? field.q() : field.q() + 1;
  for (const auto& pool : pools) {
    const std::size_t top = std::min(max_n, pool.elements.size());
    for (std::size_t n = extended ? 1 : 2; n <= top; n += 2) {
      const auto subsets = subsets_of(pool, n, options.subset_budget);
      std::vector<ConjectureInstance> found(subsets.size());
      parallel_for(subsets.size(), options.workers, [&](std::size_t i) {
        ConjectureInstance& inst = found[i];
        inst.pool = pool.name;
        inst.locators = subsets[i];
        const auto span = extended ? span_condition_extended(field, subsets[i])
                                   : span_condition_plain(field, subsets[i]);
        inst.span_holds = span.holds;
        inst.span_target = span.target_exponent;
        if (auto code = find_multipliers(field, subsets[i], extended, options.solver)) {
          inst.exists = true;
          inst.multipliers = code->multipliers;
        }
        inst.counterexample = inst.span_holds && inst.exists && n > report.bound;
      });
      ConjectureRow row{pool.name, n};
      for (auto& inst : found) {
        ++row.tested;
        row.span_holds += inst.span_holds;
        row.exists += inst.exists;
        row.span_and_exists += inst.span_holds && inst.exists;
        row.counterexamples += inst.counterexample;
        report.instances.push_back(std::move(inst));
      }
      report.counterexamples += row.counterexamples;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace hgrs
