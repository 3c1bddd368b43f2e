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

// Hermitian self-duality of GRS and extended GRS codes.
//
// Three independent checks are provided: the Gram matrix of the generator
// rows under <x, y>_H = sum x_i y_i^q (criterion_direct), the polynomial
// witness criteria (criterion_lemma1 / criterion_lemma2), and the power-sum
// systems A1 x = 0 / A2 x = (0, ..., 0, -1) whose solvability in (F_q^*)^n
// decides whether any multiplier vector makes a locator vector self-dual
// (find_multipliers).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hgrs/error.hpp"
#include "hgrs/field.hpp"
#include "hgrs/grs.hpp"
#include "hgrs/linalg.hpp"
#include "hgrs/poly.hpp"

namespace hgrs {

/// Plain codes need n = 2k, extended codes n = 2k - 1.
inline void check_self_dual_shape(const CodeSpec& code) {
  const std::size_t n = code.n();
  const bool ok = code.extended ? (n + 1 == 2 * code.k) : (n == 2 * code.k);
  if (!ok || code.k == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(code.extended ? "extended" : "plain") + " code with n = " +
                    std::to_string(n) + ", k = " + std::to_string(code.k) +
                    " cannot be self-dual");
  }
}

/// Self-dual iff self-orthogonal here, since the shape forces dim C = length / 2.
inline bool criterion_direct(const Field& field, const CodeSpec& code) {
  check_self_dual_shape(code);
  return hermitian_gram(field, code).is_zero();
}

/// The polynomial g of degree < n with u_i g(a_i) = v_i^{q+1} f(a_i)^q.
/// The witness criteria accept iff deg g <= k - 1 (and, for extended codes,
/// g_{k-1} = -f_{k-1}^q) for every message f.
inline Poly lemma_witness(const Field& field, const CodeSpec& code, const Poly& f) {
  const UVector u = u_vector(field, code.locators);
  std::vector<std::pair<Element, Element>> points;
  points.reserve(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) {
    const Element a = code.locators[i];
    const Element target = field.mul(field.norm(code.multipliers[i]),
                                     field.frobenius(eval(field, f, a)));
    points.emplace_back(a, field.div(target, u.u[i]));
  }
  return interpolate(field, points);
}

namespace detail {

// f -> f(a)^q is Frobenius-semilinear and the witness condition is linear
// in g, so the monomials x^0 .. x^{k-1} decide every message.
inline bool witness_criterion(const Field& field, const CodeSpec& code) {
  validate(field, code);
  for (std::size_t j = 0; j < code.k; ++j) {
    const Poly g = lemma_witness(field, code, Poly::monomial(field, j, field.one()));
    if (!g.degree_at_most(code.k - 1)) return false;
    if (code.extended) {
      const Element expected = j + 1 == code.k ? field.neg(field.one()) : field.zero();
      if (g.coeff(code.k - 1) != expected) return false;
    }
  }
  return true;
}

}  // namespace detail

inline bool criterion_lemma1(const Field& field, const CodeSpec& code) {
  if (code.extended) throw Error(ErrorCode::DimensionMismatch, "plain code expected");
  check_self_dual_shape(code);
  return detail::witness_criterion(field, code);
}

inline bool criterion_lemma2(const Field& field, const CodeSpec& code) {
  if (!code.extended) throw Error(ErrorCode::DimensionMismatch, "extended code expected");
  check_self_dual_shape(code);
  return detail::witness_criterion(field, code);
}

/// criterion_lemma1 or criterion_lemma2, whichever fits the code.
inline bool criterion_lemma(const Field& field, const CodeSpec& code) {
  return code.extended ? criterion_lemma2(field, code) : criterion_lemma1(field, code);
}

/// a^e evaluated at one locator, with 0^0 = 1.
inline Element locator_power(const Field& field, Element a, std::int64_t e) {
  return field.pow(a, e);
}

inline Vector power_vector(const Field& field, std::span<const Element> a, std::int64_t e) {
  Vector out;
  out.reserve(a.size());
  for (Element x : a) out.push_back(locator_power(field, x, e));
  return out;
}

struct CriterionRow {
  std::size_t i = 0;
  std::size_t j = 0;
  /// i + j q, unreduced.
  std::int64_t exponent = 0;
};

struct CriterionMatrix {
  bool extended = false;
  std::vector<CriterionRow> rows;
  Matrix matrix;
  Vector rhs;
};

/// Rows sum_l a_l^{i + jq} x_l for 0 <= i, j < n/2 (plain) or 0 <= i, j <=
/// (n-1)/2 (extended), ordered with j outer and i inner. The right-hand
/// side is zero except for the final extended row (i = j = (n-1)/2), which
/// is -1.
inline CriterionMatrix build_criterion_matrix(const Field& field, std::span<const Element> a,
                                              bool extended) {
  const std::size_t n = a.size();
  if (n == 0 || (extended ? n % 2 == 0 : n % 2 == 1)) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(extended ? "extended" : "plain") + " criterion with n = " +
                    std::to_string(n));
  }
  check_distinct(field, a);
  const std::size_t side = extended ? (n - 1) / 2 + 1 : n / 2;
  CriterionMatrix out;
  out.extended = extended;
  out.matrix = Matrix(side * side, n);
  out.rhs.assign(side * side, field.zero());
  const std::int64_t q = field.q();
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      const std::size_t r = j * side + i;
      const std::int64_t e = static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j) * q;
      out.rows.push_back({i, j, e});
      for (std::size_t l = 0; l < n; ++l) out.matrix(r, l) = locator_power(field, a[l], e);
    }
  }
  if (extended) out.rhs.back() = field.neg(field.one());
  return out;
}

/// A multiplier vector v making GRS_{n/2}(a, v) (or GRS_{(n+1)/2}(a, v, inf))
/// Hermitian self-dual, or nullopt as a proof that none exists. The norm
/// vector x_i = v_i^{q+1} is the smallest solution in (F_q^*)^n of the
/// criterion system; each v_i is its smallest-dlog norm preimage.
inline std::optional<CodeSpec> find_multipliers(const Field& field, std::span<const Element> a,
                                                bool extended,
                                                const SubfieldSearchLimits& limits = {}) {
  const CriterionMatrix crit = build_criterion_matrix(field, a, extended);
  const auto sol = solve_in_subfield_nonzero(field, crit.matrix, crit.rhs, limits);
  if (!sol) return std::nullopt;
  if (!sol->certificate) throw std::logic_error("subfield solution failed verification");
  CodeSpec code;
  code.locators.assign(a.begin(), a.end());
  code.extended = extended;
  code.k = extended ? (a.size() + 1) / 2 : a.size() / 2;
  for (Element x : sol->x) code.multipliers.push_back(field.solve_norm(x));
  if (!criterion_direct(field, code)) {
    throw std::logic_error("lifted multipliers do not give a self-dual code");
  }
  return code;
}

struct SpanConditionResult {
  bool holds = false;
  /// Exponent of the target power vector found inside the span.
  std::optional<std::int64_t> target_exponent;
  std::vector<std::int64_t> spanning_exponents;
  /// Coefficients of the spanning vectors reproducing the target.
  Vector witness;
};

namespace detail {

inline SpanConditionResult span_membership(const Field& field, std::span<const Element> a,
                                           std::vector<std::int64_t> spanning,
                                           std::span<const std::int64_t> targets) {
  SpanConditionResult out;
  out.spanning_exponents = std::move(spanning);
  Matrix m(a.size(), out.spanning_exponents.size());
  for (std::size_t c = 0; c < out.spanning_exponents.size(); ++c) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      m(r, c) = locator_power(field, a[r], out.spanning_exponents[c]);
    }
  }
  for (std::int64_t t : targets) {
    const Vector target = power_vector(field, a, t);
    if (auto w = solve_linear(field, m, target)) {
      out.holds = true;
      out.target_exponent = t;
      out.witness = std::move(*w);
      return out;
    }
  }
  return out;
}

}  // namespace detail

/// Is a^{n/2 + q} or a^{(n/2) q + 1} in the span of {a^{iq + j} : 0 <= i, j <
/// n/2}?
inline SpanConditionResult span_condition_plain(const Field& field, std::span<const Element> a) {
  const std::size_t n = a.size();
  if (n == 0 || n % 2 == 1) throw Error(ErrorCode::DimensionMismatch, "span condition needs even n");
  check_distinct(field, a);
  const std::int64_t q = field.q();
  const auto h = static_cast<std::int64_t>(n / 2);
  std::vector<std::int64_t> spanning;
  for (std::int64_t i = 0; i < h; ++i) {
    for (std::int64_t j = 0; j < h; ++j) spanning.push_back(i * q + j);
  }
  const std::int64_t targets[] = {h + q, h * q + 1};
  return detail::span_membership(field, a, std::move(spanning), targets);
}

/// Is a^{(n+1)/2} or a^{((n+1)/2) q} in the span of {a^{iq + j} : 0 <= i <
/// (n-1)/2, 0 <= j <= (n-1)/2} together with {a^{((n-1)/2) q + j} : 0 <= j <
/// (n-1)/2}?
inline SpanConditionResult span_condition_extended(const Field& field,
                                                   std::span<const Element> a) {
  const std::size_t n = a.size();
  if (n % 2 == 0) throw Error(ErrorCode::DimensionMismatch, "span condition needs odd n");
  check_distinct(field, a);
  const std::int64_t q = field.q();
  const auto h = static_cast<std::int64_t>((n - 1) / 2);
  std::vector<std::int64_t> spanning;
  for (std::int64_t i = 0; i < h; ++i) {
    for (std::int64_t j = 0; j <= h; ++j) spanning.push_back(i * q + j);
  }
  for (std::int64_t j = 0; j < h; ++j) spanning.push_back(h * q + j);
  const std::int64_t targets[] = {h + 1, (h + 1) * q};
  return detail::span_membership(field, a, std::move(spanning), targets);
}

}  // namespace hgrs
