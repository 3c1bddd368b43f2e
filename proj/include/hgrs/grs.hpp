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

// Generalized Reed-Solomon codes GRS_k(a, v) and their extensions
// GRS_k(a, v, inf), which append the coefficient of x^{k-1} as one more
// coordinate.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hgrs/combinatorics.hpp"
#include "hgrs/error.hpp"
#include "hgrs/field.hpp"
#include "hgrs/linalg.hpp"
#include "hgrs/poly.hpp"

namespace hgrs {

struct CodeSpec {
  std::vector<Element> locators;
  std::vector<Element> multipliers;
  std::size_t k = 0;
  /// The infinity coordinate is implied by this flag; it has no locator.
  bool extended = false;

  std::size_t n() const { return locators.size(); }
  /// Codeword length: n, or n + 1 for extended codes.
  std::size_t length() const { return locators.size() + (extended ? 1 : 0); }

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

inline void check_distinct(const Field& field, std::span<const Element> locators) {
  std::vector<Element> sorted(locators.begin(), locators.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw Error(ErrorCode::DuplicateLocator, "locator " + field.format(*it) + " repeated");
  }
}

inline void validate(const Field& field, const CodeSpec& code) {
  if (code.multipliers.size() != code.locators.size()) {
    throw Error(ErrorCode::InvalidArgument, "locator and multiplier counts differ");
  }
  for (Element v : code.multipliers) {
    if (v.is_zero()) throw Error(ErrorCode::InvalidArgument, "multipliers must be nonzero");
  }
  check_distinct(field, code.locators);
  if (code.k < 1 || code.k > code.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "k = " + std::to_string(code.k) + " with n = " + std::to_string(code.n()));
  }
}

struct UVector {
  std::vector<Element> u;
};

/// u_i = prod_{j != i} (a_i - a_j)^{-1}. For a single locator the product
/// is empty and u = (1).
inline UVector u_vector(const Field& field, std::span<const Element> locators) {
  if (locators.empty()) throw Error(ErrorCode::InvalidArgument, "no locators");
  check_distinct(field, locators);
  UVector out;
  out.u.reserve(locators.size());
  for (std::size_t i = 0; i < locators.size(); ++i) {
    Element prod = field.one();
    for (std::size_t j = 0; j < locators.size(); ++j) {
      if (j != i) prod = field.mul(prod, field.sub(locators[i], locators[j]));
    }
    out.u.push_back(field.inv(prod));
  }
  return out;
}

/// Rows v_j a_j^i for 0 <= i < k; the extended form adds the column e_k.
inline Matrix generator_matrix(const Field& field, const CodeSpec& code) {
  validate(field, code);
  const std::size_t n = code.n();
  Matrix g(code.k, code.length());
  for (std::size_t j = 0; j < n; ++j) {
    Element entry = code.multipliers[j];
    for (std::size_t i = 0; i < code.k; ++i) {
      g(i, j) = entry;
      entry = field.mul(entry, code.locators[j]);
    }
  }
  if (code.extended) g(code.k - 1, n) = field.one();
  return g;
}

/// (v_1 f(a_1), ..., v_n f(a_n)[, f_{k-1}]).
inline Vector encode(const Field& field, const CodeSpec& code, const Poly& f) {
  validate(field, code);
  if (!f.degree_at_most(code.k - 1)) {
    throw Error(ErrorCode::DegreeTooHigh, "message degree exceeds k - 1");
  }
  Vector word;
  word.reserve(code.length());
  for (std::size_t j = 0; j < code.n(); ++j) {
    word.push_back(field.mul(code.multipliers[j], eval(field, f, code.locators[j])));
  }
  if (code.extended) word.push_back(f.coeff(code.k - 1));
  return word;
}

inline Element hermitian_product(const Field& field, std::span<const Element> x,
                                 std::span<const Element> y) {
  Element acc = field.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = field.add(acc, field.mul(x[i], field.frobenius(y[i])));
  }
  return acc;
}

/// G * conj(G)^T: the Hermitian inner products of all generator rows.
inline Matrix hermitian_gram(const Field& field, const CodeSpec& code) {
  const Matrix g = generator_matrix(field, code);
  Matrix gram(code.k, code.k);
  for (std::size_t i = 0; i < code.k; ++i) {
    for (std::size_t j = 0; j < code.k; ++j) gram(i, j) = hermitian_product(field, g.row(i), g.row(j));
  }
  return gram;
}

struct MdsLimits {
  /// Maximum number of messages (q^{2k}) for the brute-force distance.
  std::uint64_t codeword_budget = 1'000'000;
  /// Maximum number of k x k minors examined.
  std::uint64_t minor_budget = 100'000;
};

/// Minimum weight over all nonzero codewords of the row space of g.
inline std::size_t min_distance_of(const Field& field, const Matrix& g, std::uint64_t budget) {
  std::uint64_t messages = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (messages > budget / field.order()) {
      throw Error(ErrorCode::EnumerationBudgetExceeded, "message space exceeds budget");
    }
    messages *= field.order();
  }
  std::vector<std::uint32_t> msg(g.rows(), 0);
  std::size_t best = g.cols() + 1;
  Vector word(g.cols());
  for (std::uint64_t count = 1; count < messages; ++count) {
    for (std::size_t i = 0; i < msg.size(); ++i) {
      if (++msg[i] < field.order()) break;
      msg[i] = 0;
    }
    std::fill(word.begin(), word.end(), field.zero());
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (msg[i] == 0) continue;
      const Element coef{msg[i]};
      for (std::size_t c = 0; c < g.cols(); ++c) word[c] = field.add(word[c], field.mul(coef, g(i, c)));
    }
    const auto weight = static_cast<std::size_t>(
        std::count_if(word.begin(), word.end(), [](Element e) { return !e.is_zero(); }));
    best = std::min(best, weight);
  }
  return best;
}

inline std::size_t min_distance_bruteforce(const Field& field, const CodeSpec& code,
                                           std::uint64_t budget = MdsLimits{}.codeword_budget) {
  return min_distance_of(field, generator_matrix(field, code), budget);
}

/// True iff every maximal minor of g (rows x rows) is nonzero.
inline bool maximal_minors_nonzero(const Field& field, const Matrix& g, std::uint64_t budget) {
  const std::size_t k = g.rows();
  if (binomial(g.cols(), k) > budget) {
    throw Error(ErrorCode::CombinatorialBudgetExceeded,
                "C(" + std::to_string(g.cols()) + ", " + std::to_string(k) + ") minors");
  }
  bool all_nonzero = true;
  Matrix minor(k, k);
  for_each_combination(g.cols(), k, [&](const std::vector<std::size_t>& cols) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = g(r, cols[c]);
    }
    all_nonzero = rank(field, minor) == k;
    return all_nonzero;
  });
  return all_nonzero;
}

/// MDS check of a generator matrix by both minors and brute-force distance,
/// whichever fit their budgets. When both run they must agree.
inline bool is_mds(const Field& field, const Matrix& g, const MdsLimits& limits = {}) {
  std::optional<bool> by_minors;
  std::optional<bool> by_distance;
  if (binomial(g.cols(), g.rows()) <= limits.minor_budget) {
    by_minors = maximal_minors_nonzero(field, g, limits.minor_budget);
  }
  std::uint64_t messages = 1;
  bool small = true;
  for (std::size_t i = 0; i < g.rows() && small; ++i) {
    small = messages <= limits.codeword_budget / field.order();
    messages *= field.order();
  }
  if (small) {
    by_distance = min_distance_of(field, g, limits.codeword_budget) == g.cols() - g.rows() + 1;
  }
  if (!by_minors && !by_distance) {
    throw Error(ErrorCode::CombinatorialBudgetExceeded, "neither MDS check fits its budget");
  }
  if (by_minors && by_distance && *by_minors != *by_distance) {
    throw std::logic_error("minor test and distance test disagree on MDS property");
  }
  return by_minors ? *by_minors : *by_distance;
}

inline bool is_mds(const Field& field, const CodeSpec& code, const MdsLimits& limits = {}) {
  return is_mds(field, generator_matrix(field, code), limits);
}

}  // namespace hgrs
