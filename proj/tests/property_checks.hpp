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

// Randomized identities over F_{q^2} for q in {3, 4, 5, 7, 8, 9}, shared by
// the unit suite and the acceptance runner. Each check draws at least 10^4
// cases in total.
#pragma once

#include <algorithm>
#include <string>

#include "support.hpp"

namespace hgrs::testing {

struct PropertyResult {
  std::string name;
  long cases = 0;
  long failures = 0;

  void check(bool ok) { failures += ok ? 0 : 1; }
  template <class A, class B>
  void check_eq(const A& a, const B& b) {
    check(a == b);
  }
};


inline constexpr int kCasesPerField = 2000;

inline PropertyResult field_axioms() {
  PropertyResult r{"FieldAxioms"};
  auto g = seeded_rng(100);
  int cases = 0;
  for (const Field& f : property_fields()) {
    for (int t = 0; t < kCasesPerField; ++t, ++cases) {
      const Element a = random_element(f, g), b = random_element(f, g),
                    c = random_element(f, g);
      r.check_eq(f.add(a, b), f.add(b, a));
      r.check_eq(f.mul(a, b), f.mul(b, a));
      r.check_eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      r.check_eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      r.check_eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      r.check_eq(f.add(a, f.zero()), a);
      r.check_eq(f.mul(a, f.one()), a);
      r.check_eq(f.add(a, f.neg(a)), f.zero());
      r.check_eq(f.sub(f.add(a, b), b), a);
      if (!a.is_zero()) {
        r.check_eq(f.mul(a, f.inv(a)), f.one());
        r.check_eq(f.div(f.mul(a, b), a), b);
      }
    }
  }
  r.cases = cases;
  return r;
}

inline PropertyResult frobenius_automorphism() {
  PropertyResult r{"FrobeniusAutomorphism"};
  auto g = seeded_rng(101);
  int cases = 0;
  for (const Field& f : property_fields()) {
    for (int t = 0; t < kCasesPerField; ++t, ++cases) {
      const Element a = random_element(f, g), b = random_element(f, g);
      r.check_eq(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      r.check_eq(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
      r.check_eq(f.frobenius(f.frobenius(a)), a);
      r.check_eq(f.frobenius(a), f.pow(a, f.q()));
      r.check(f.in_subfield(f.trace(a)));
      r.check(f.in_subfield(f.norm(a)));
      r.check_eq(f.norm(f.mul(a, b)), f.mul(f.norm(a), f.norm(b)));
    }
  }
  r.cases = cases;
  return r;
}

inline PropertyResult dlog_round_trip() {
  PropertyResult r{"DlogRoundTrip"};
  auto g = seeded_rng(102);
  int cases = 0;
  for (const Field& f : property_fields()) {
    for (int t = 0; t < kCasesPerField; ++t, ++cases) {
      const Element a = random_nonzero(f, g), b = random_nonzero(f, g);
      r.check_eq(f.power_of_theta(f.dlog(a)), a);
      r.check_eq((f.dlog(a) + f.dlog(b)) % f.group_order(), f.dlog(f.mul(a, b)));
      const std::int64_t e = static_cast<std::int64_t>(g() % 1000) - 500;
      r.check_eq(std::int64_t{f.dlog(f.pow(a, e))}, detail::mod_floor(e * f.dlog(a), f.group_order()));
    }
  }
  r.cases = cases;
  return r;
}

inline PropertyResult interpolation_round_trip() {
  PropertyResult r{"InterpolationRoundTrip"};
  auto g = seeded_rng(103);
  int cases = 0;
  for (const Field& f : property_fields()) {
    for (int t = 0; t < kCasesPerField; ++t, ++cases) {
      const std::size_t n = 1 + g() % std::min<std::size_t>(f.order(), 8);
      const auto xs = random_distinct(f, n, g);
      std::vector<Element> coeffs(n);
      for (auto& c : coeffs) c = random_element(f, g);
      const Poly p(coeffs);
      std::vector<std::pair<Element, Element>> pts;
      for (Element x : xs) pts.emplace_back(x, eval(f, p, x));
      r.check_eq(interpolate(f, pts), p);
    }
  }
  r.cases = cases;
  return r;
}

// On B_l the u-vector satisfies u_i^q = -u_i for even n and u_i^q = u_i for
// odd n. On B_{l,m} the same holds for the u-vector of the trace-zero
// coordinates (a_i - a_l) / beta_m.
inline PropertyResult u_vector_conjugation() {
  PropertyResult r{"UVectorConjugation"};
  auto g = seeded_rng(104);
  int cases = 0;
  for (const Field& f : property_fields()) {
    const auto ms = valid_m_values(f);
    for (int t = 0; t < kCasesPerField; ++t, ++cases) {
      const std::size_t l = 1 + g() % f.q();
      const std::size_t n = 2 + g() % (f.q() - 1);
      std::vector<Element> pts;
      if (t % 2 == 0) {
        pts = family_B(f, l).elements;
      } else {
        const auto fam = family_Blm(f, l, ms[g() % ms.size()]);
        for (Element a : fam.elements) pts.push_back(f.div(f.sub(a, fam.a_l), fam.beta_m));
      }
      std::shuffle(pts.begin(), pts.end(), g);
      pts.resize(n);
      for (Element ui : u_vector(f, pts).u) {
        r.check_eq(f.frobenius(ui), n % 2 == 0 ? f.neg(ui) : ui);
      }
    }
  }
  r.cases = cases;
  return r;
}

inline PropertyResult family_membership() {
  PropertyResult r{"FamilyMembership"};
  auto g = seeded_rng(105);
  int cases = 0;
  for (const Field& f : property_fields()) {
    const auto ms = valid_m_values(f);
    for (int t = 0; t < kCasesPerField; ++t, ++cases) {
      const std::size_t l1 = 1 + g() % f.q(), l2 = 1 + g() % f.q();
      const std::int64_t m = ms[g() % ms.size()];
      const auto b1 = family_Blm(f, l1, m).elements, b2 = family_Blm(f, l2, m).elements;
      const Element x = b1[g() % b1.size()];
      const bool in_b2 = std::find(b2.begin(), b2.end(), x) != b2.end();
      r.check_eq(in_b2, l1 == l2);
      // B_{l,m} = a_l + theta^m V: x - a_l is theta^m times a trace-zero element.
      const Element y = f.div(f.sub(x, trace_zero_label(f, l1)), f.power_of_theta(m));
      r.check(f.trace(y).is_zero());
    }
  }
  r.cases = cases;
  return r;
}

inline std::vector<PropertyResult> all_property_checks() {
  return {field_axioms(), frobenius_automorphism(), dlog_round_trip(), interpolation_round_trip(),
          u_vector_conjugation(), family_membership()};
}

}  // namespace hgrs::testing
