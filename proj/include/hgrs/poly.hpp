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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hgrs/error.hpp"
#include "hgrs/field.hpp"

namespace hgrs {

/// Univariate polynomial over F_{q^2}. Coefficients ascending, no trailing
/// zeros; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(Element c) { return Poly({c}); }
  static Poly monomial(const Field& field, std::size_t j, Element c) {
    std::vector<Element> coeffs(j + 1, field.zero());
    coeffs[j] = c;
    return Poly(std::move(coeffs));
  }

  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// nullopt for the zero polynomial (degree -infinity).
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool degree_at_most(std::size_t bound) const { return coeffs_.size() <= bound + 1; }

  /// Coefficient of x^j, zero beyond the degree.
  Element coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Element{}; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Element> coeffs_;
};

inline Element eval(const Field& field, const Poly& f, Element x) {
  Element acc = field.zero();
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

inline Poly add(const Field& field, const Poly& f, const Poly& g) {
  std::vector<Element> out(std::max(f.coeffs().size(), g.coeffs().size()), field.zero());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = field.add(f.coeff(j), g.coeff(j));
  return Poly(std::move(out));
}

inline Poly mul(const Field& field, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Element> out(f.coeffs().size() + g.coeffs().size() - 1, field.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      out[i + j] = field.add(out[i + j], field.mul(f.coeffs()[i], g.coeffs()[j]));
    }
  }
  return Poly(std::move(out));
}

inline Poly scale(const Field& field, const Poly& f, Element lambda) {
  std::vector<Element> out;
  out.reserve(f.coeffs().size());
  for (Element c : f.coeffs()) out.push_back(field.mul(c, lambda));
  return Poly(std::move(out));
}

/// h(x) = sum f_j^q x^j.
inline Poly conjugate_coeffs(const Field& field, const Poly& f) {
  std::vector<Element> out;
  out.reserve(f.coeffs().size());
  for (Element c : f.coeffs()) out.push_back(field.frobenius(c));
  return Poly(std::move(out));
}

/// f(a x + b), by Horner's rule over the linear polynomial a x + b.
inline Poly compose_affine(const Field& field, const Poly& f, Element a, Element b) {
  const Poly linear({b, a});
  Poly acc;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = add(field, mul(field, acc, linear), Poly::constant(*it));
  }
  return acc;
}

/// Lagrange interpolation: the unique polynomial of degree < points.size()
/// through the given points.
inline Poly interpolate(const Field& field, std::span<const std::pair<Element, Element>> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "interpolation needs a point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw Error(ErrorCode::DuplicateAbscissa, "abscissa " + field.format(points[i].first));
      }
    }
  }
  Poly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].second.is_zero()) continue;
    Poly basis = Poly::constant(field.one());
    Element denom = field.one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = mul(field, basis, Poly({field.neg(points[j].first), field.one()}));
      denom = field.mul(denom, field.sub(points[i].first, points[j].first));
    }
    result = add(field, result, scale(field, basis, field.div(points[i].second, denom)));
  }
  return result;
}

}  // namespace hgrs
