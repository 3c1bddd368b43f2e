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

// Explicit Hermitian self-dual (extended) GRS codes from three locator
// families over F_{q^2}:
//
//   S       = {alpha : alpha^q = a alpha + b},  a = theta^e
//   B_l     = a_l theta + V
//   B_{l,m} = a_l + theta^m V
//
// where V = {a_1 = 0, a_2, ..., a_q} is the kernel of the trace. On each
// family the Frobenius map is affine, alpha^q = A alpha + B, so for every
// message f the polynomial g(x) = lambda h(A x + B), h the coefficientwise
// conjugate of f, satisfies v_i^{q+1} f(alpha_i)^q = u_i g(alpha_i) as soon
// as v_i^{q+1} = lambda u_i. The constructors pick lambda and v per family
// and parity of q.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgrs/error.hpp"
#include "hgrs/field.hpp"
#include "hgrs/grs.hpp"
#include "hgrs/poly.hpp"

namespace hgrs {

struct FamilyS {
  std::int64_t e = 0;
  Element a;
  Element b;
  std::vector<Element> elements;  // canonical order
};

/// Every alpha with alpha^q = theta^e alpha + b. May be empty.
inline FamilyS family_S(const Field& field, std::int64_t e, Element b) {
  FamilyS s{detail::mod_floor(e, field.group_order()), field.power_of_theta(e), b, {}};
  for (Element x : field.elements()) {
    if (field.frobenius(x) == field.add(field.mul(s.a, x), b)) s.elements.push_back(x);
  }
  return s;
}

/// True iff a_l beta is outside V^* for every 2 <= l <= q.
inline bool coset_multiplier_valid(const Field& field, Element beta) {
  const auto v = field.trace_zero_set().elements;
  for (std::size_t l = 1; l < v.size(); ++l) {
    const Element x = field.mul(v[l], beta);
    if (!x.is_zero() && field.trace(x).is_zero()) return false;
  }
  return true;
}

inline Element trace_zero_label(const Field& field, std::size_t l) {
  const auto v = field.trace_zero_set().elements;
  if (l < 1 || l > v.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "l = " + std::to_string(l) + " outside 1.." + std::to_string(v.size()));
  }
  return v[l - 1];
}

struct FamilyB {
  std::size_t l = 0;
  Element a_l;
  Element beta;
  std::vector<Element> elements;  // canonical order
};

/// B_l = a_l theta + V.
inline FamilyB family_B(const Field& field, std::size_t l) {
  const Element beta = field.theta();
  if (!coset_multiplier_valid(field, beta)) {
    throw Error(ErrorCode::InvalidBeta, "some a_l theta lies in V*");
  }
  FamilyB out{l, trace_zero_label(field, l), beta, {}};
  const Element shift = field.mul(out.a_l, beta);
  for (Element x : field.trace_zero_set().elements) out.elements.push_back(field.add(shift, x));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

struct FamilyBlm {
  std::size_t l = 0;
  std::int64_t m = 0;
  Element a_l;
  Element beta_m;
  std::vector<Element> elements;  // canonical order
};

/// a_l + theta^m V without the validity check on theta^m.
inline std::vector<Element> coset_Blm_unchecked(const Field& field, std::size_t l, std::int64_t m) {
  const Element a_l = trace_zero_label(field, l);
  const Element beta = field.power_of_theta(m);
  std::vector<Element> out;
  for (Element x : field.trace_zero_set().elements) out.push_back(field.add(a_l, field.mul(beta, x)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// B_{l,m} = a_l + theta^m V.
inline FamilyBlm family_Blm(const Field& field, std::size_t l, std::int64_t m) {
  const Element beta = field.power_of_theta(m);
  if (!coset_multiplier_valid(field, beta)) {
    throw Error(ErrorCode::InvalidBetaM,
                "theta^" + std::to_string(m) + " a_l lies in V* for some l >= 2");
  }
  return {l, detail::mod_floor(m, field.group_order()), trace_zero_label(field, l), beta,
          coset_Blm_unchecked(field, l, m)};
}

/// Every m in [0, q^2 - 1) for which theta^m is a valid B_{l,m} multiplier.
inline std::vector<std::int64_t> valid_m_values(const Field& field) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 0; m < field.group_order(); ++m) {
    if (coset_multiplier_valid(field, field.power_of_theta(m))) out.push_back(m);
  }
  return out;
}

/// A constructed code together with the data of its self-duality argument.
struct Construction {
  int theorem = 0;
  CodeSpec code;
  /// v_i^{q+1} = lambda u_i for every i.
  Element lambda;
  /// alpha_i^q = affine_a alpha_i + affine_b on the family.
  Element affine_a;
  Element affine_b;
  /// Unreduced exponents of theta for each v_i as derived in the proof.
  std::vector<std::int64_t> multiplier_exponents;
  /// Extended cases: the smallest s >= 0 meeting the divisibility condition.
  std::optional<std::int64_t> s;
};

/// g(x) = lambda h(A x + B), the witness of the self-duality criterion for f.
inline Poly witness_polynomial(const Field& field, const Construction& c, const Poly& f) {
  return scale(field, compose_affine(field, conjugate_coeffs(field, f), c.affine_a, c.affine_b),
               c.lambda);
}

namespace detail {

inline std::size_t self_dual_dimension(std::size_t n, bool extended) {
  if (n == 0) throw Error(ErrorCode::HypothesisViolated, "n must be positive");
  if (extended && n % 2 == 0) throw Error(ErrorCode::HypothesisViolated, "extended needs odd n");
  if (!extended && n % 2 == 1) throw Error(ErrorCode::HypothesisViolated, "plain needs even n");
  return extended ? (n + 1) / 2 : n / 2;
}

inline std::vector<Element> pick_locators(const Field& field, std::span<const Element> family,
                                          std::size_t n,
                                          const std::optional<std::vector<Element>>& explicit_locators,
                                          const std::string& family_name) {
  if (n > field.q()) {
    throw Error(ErrorCode::HypothesisViolated,
                "n = " + std::to_string(n) + " exceeds q = " + std::to_string(field.q()));
  }
  if (explicit_locators) {
    if (explicit_locators->size() != n) {
      throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " locators");
    }
    check_distinct(field, *explicit_locators);
    for (Element a : *explicit_locators) {
      if (std::find(family.begin(), family.end(), a) == family.end()) {
        throw Error(ErrorCode::NotInFamily, field.format(a) + " is not in " + family_name);
      }
    }
    return *explicit_locators;
  }
  if (family.size() < n) {
    throw Error(ErrorCode::HypothesisViolated,
                family_name + " has only " + std::to_string(family.size()) + " elements");
  }
  return {family.begin(), family.begin() + static_cast<std::ptrdiff_t>(n)};
}

inline std::int64_t odd_q_half(const Field& field) { return (field.q() + 1) / 2; }

inline Element minus_one_pow(const Field& field, std::size_t k) {
  return k % 2 == 0 ? field.one() : field.neg(field.one());
}

// c with t = offset + c (q + 1); throws if t - offset is not a multiple of q + 1.
inline std::int64_t quotient_exponent(const Field& field, std::uint32_t t, std::int64_t offset) {
  const std::int64_t step = field.q() + 1;
  const std::int64_t r = mod_floor(static_cast<std::int64_t>(t) - offset, field.group_order());
  if (r % step != 0) throw std::logic_error("u_i has the wrong exponent class");
  return r / step;
}

inline void finish(const Field& field, Construction& c, const std::vector<Element>& u) {
  for (std::int64_t e : c.multiplier_exponents) c.code.multipliers.push_back(field.power_of_theta(e));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (field.norm(c.code.multipliers[i]) != field.mul(c.lambda, u[i])) {
      throw std::logic_error("v_i^{q+1} != lambda u_i");
    }
  }
}

// Smallest s >= 0 with (q - 1) | s + shift.
inline std::int64_t smallest_s(const Field& field, std::int64_t shift) {
  const std::int64_t mod = field.q() - 1;
  return mod_floor(-shift, mod);
}

}  // namespace detail

/// Codes on S = {alpha^q = theta^e alpha + b}. Plain: n = 2k <= q and
/// (q-1) | e(n-1). Extended: n = 2k-1 <= q and (q-1) | e(k-1).
inline Construction construct_theorem1(
    const Field& field, std::int64_t e, Element b, std::size_t n, bool extended,
    const std::optional<std::vector<Element>>& locators = std::nullopt) {
  const std::size_t k = detail::self_dual_dimension(n, extended);
  const std::int64_t q = field.q();
  const std::int64_t group = field.group_order();
  e = detail::mod_floor(e, group);
  const auto n1 = static_cast<std::int64_t>(n - 1);
  const auto k1 = static_cast<std::int64_t>(k - 1);
  if (!extended && (e * n1) % (q - 1) != 0) {
    throw Error(ErrorCode::HypothesisViolated, "(q-1) does not divide e(n-1)");
  }
  if (extended && (e * k1) % (q - 1) != 0) {
    throw Error(ErrorCode::HypothesisViolated, "(q-1) does not divide e(k-1)");
  }
  // The argument divides e(n-1) by q-1 in both cases.
  if ((e * n1) % (q - 1) != 0) throw std::logic_error("e(n-1)/(q-1) is not an integer");

  const FamilyS s = family_S(field, e, b);
  Construction c;
  c.theorem = 1;
  c.code.locators = detail::pick_locators(field, s.elements, n, locators, "S");
  c.code.k = k;
  c.code.extended = extended;
  c.affine_a = s.a;
  c.affine_b = b;

  const std::int64_t big_l = e * n1 / (q - 1);
  const auto u = u_vector(field, c.code.locators).u;
  if (!extended) {
    c.lambda = field.power_of_theta(big_l);
    for (Element ui : u) c.multiplier_exponents.push_back(detail::quotient_exponent(field, field.dlog(ui), -big_l));
  } else {
    const std::int64_t sv = detail::smallest_s(field, e * k1 / (q - 1));
    c.s = sv;
    c.lambda = field.neg(field.power_of_theta(big_l + sv * (q + 1)));
    const std::int64_t offset = q % 2 == 1 ? (q - 1) / 2 : 0;
    for (Element ui : u) {
      c.multiplier_exponents.push_back(detail::quotient_exponent(field, field.dlog(ui), -big_l) + sv +
                                       offset);
    }
  }
  detail::finish(field, c, u);
  return c;
}

/// Codes on one coset B_l = a_l theta + V, n <= q.
inline Construction construct_theorem2(
    const Field& field, std::size_t l, std::size_t n, bool extended,
    const std::optional<std::vector<Element>>& locators = std::nullopt) {
  const std::size_t k = detail::self_dual_dimension(n, extended);
  const std::int64_t q = field.q();
  const FamilyB fam = family_B(field, l);
  Construction c;
  c.theorem = 2;
  c.code.locators = detail::pick_locators(field, fam.elements, n, locators, "B_" + std::to_string(l));
  c.code.k = k;
  c.code.extended = extended;

  // alpha^q = -alpha + (2 theta - xi^{q+1}) a_l with xi^{q+1} = theta^q + theta.
  const Element th = field.theta();
  const Element xi = field.solve_norm(field.add(field.frobenius(th), th));
  c.affine_a = field.neg(field.one());
  c.affine_b = field.mul(field.sub(field.add(th, th), field.norm(xi)), fam.a_l);

  const auto u = u_vector(field, c.code.locators).u;
  const bool odd = q % 2 == 1;
  if (!extended) {
    c.lambda = odd ? field.power_of_theta(detail::odd_q_half(field)) : field.one();
    for (Element ui : u) {
      const std::int64_t cc = detail::quotient_exponent(field, field.dlog(ui), odd ? detail::odd_q_half(field) : 0);
      c.multiplier_exponents.push_back(odd ? cc + 1 : cc);
    }
  } else {
    c.lambda = detail::minus_one_pow(field, k);
    const std::int64_t offset = odd ? static_cast<std::int64_t>(k) * (q - 1) / 2 : 0;
    for (Element ui : u) {
      c.multiplier_exponents.push_back(detail::quotient_exponent(field, field.dlog(ui), 0) + offset);
    }
  }
  detail::finish(field, c, u);
  return c;
}

/// Codes on one set B_{l,m} = a_l + theta^m V, n <= q.
inline Construction construct_theorem3(
    const Field& field, std::size_t l, std::int64_t m, std::size_t n, bool extended,
    const std::optional<std::vector<Element>>& locators = std::nullopt) {
  const std::size_t k = detail::self_dual_dimension(n, extended);
  const std::int64_t q = field.q();
  const FamilyBlm fam = family_Blm(field, l, m);
  m = fam.m;
  Construction c;
  c.theorem = 3;
  c.code.locators = detail::pick_locators(field, fam.elements, n, locators,
                                          "B_{" + std::to_string(l) + "," + std::to_string(m) + "}");
  c.code.k = k;
  c.code.extended = extended;

  // alpha^q = -beta^{q-1} alpha + (beta^{q-1} - 1) a_l.
  const Element beta_q1 = field.pow(fam.beta_m, q - 1);
  c.affine_a = field.neg(beta_q1);
  c.affine_b = field.mul(field.sub(beta_q1, field.one()), fam.a_l);

  // u_i = beta^{-(n-1)} prod_{j != i} (x_i - x_j)^{-1} with x_i in V.
  std::vector<Element> xs;
  for (Element a : c.code.locators) xs.push_back(field.div(field.sub(a, fam.a_l), fam.beta_m));
  const auto prod = u_vector(field, xs).u;
  const auto u = u_vector(field, c.code.locators).u;
  const auto n1 = static_cast<std::int64_t>(n - 1);
  const bool odd = q % 2 == 1;
  if (!extended) {
    if (odd) {
      c.lambda = field.power_of_theta(m * n1 + detail::odd_q_half(field));
      for (Element p : prod) {
        c.multiplier_exponents.push_back(
            detail::quotient_exponent(field, field.dlog(p), detail::odd_q_half(field)) + 1);
      }
    } else {
      c.lambda = field.pow(fam.beta_m, n1);
      for (Element p : prod) c.multiplier_exponents.push_back(detail::quotient_exponent(field, field.dlog(p), 0));
    }
  } else {
    const auto k1 = static_cast<std::int64_t>(k - 1);
    const std::int64_t sv = detail::smallest_s(field, m * k1);
    c.s = sv;
    c.lambda = field.mul(detail::minus_one_pow(field, k), field.power_of_theta(m * n1 + sv * (q + 1)));
    const std::int64_t offset = odd ? static_cast<std::int64_t>(k) * (q - 1) / 2 : 0;
    for (Element p : prod) {
      c.multiplier_exponents.push_back(detail::quotient_exponent(field, field.dlog(p), 0) + sv + offset);
    }
  }
  detail::finish(field, c, u);
  return c;
}

}  // namespace hgrs
