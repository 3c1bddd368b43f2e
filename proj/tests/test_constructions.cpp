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

#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "support.hpp"

namespace hgrs {
namespace {

std::set<std::uint32_t> dlogs(const Field& f, const std::vector<Element>& xs) {
  std::set<std::uint32_t> out;
  for (Element x : xs) out.insert(x.is_zero() ? 999 : f.dlog(x));
  return out;
}

constexpr std::uint32_t kZero = 999;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

TEST(Constructions, CosetFamiliesAtQ3) {
  const Field f(3, 1);
  EXPECT_EQ(dlogs(f, family_B(f, 1).elements), (std::set<std::uint32_t>{kZero, 2, 6}));
  EXPECT_EQ(dlogs(f, family_B(f, 2).elements), (std::set<std::uint32_t>{1, 3, 4}));
  EXPECT_EQ(dlogs(f, family_B(f, 3).elements), (std::set<std::uint32_t>{0, 5, 7}));
  EXPECT_EQ(dlogs(f, family_Blm(f, 1, 1).elements), (std::set<std::uint32_t>{kZero, 3, 7}));
  EXPECT_EQ(dlogs(f, family_Blm(f, 2, 1).elements), (std::set<std::uint32_t>{2, 4, 5}));
  EXPECT_EQ(dlogs(f, family_Blm(f, 3, 1).elements), (std::set<std::uint32_t>{0, 1, 6}));
}

TEST(Constructions, FirstCosetIsTraceZeroSet) {
  for (const Field& f : testing::property_fields()) {
    auto v = f.trace_zero_set().elements;
    std::sort(v.begin(), v.end());
    EXPECT_EQ(family_B(f, 1).elements, v);
  }
}

TEST(Constructions, ThetaIsAlwaysAValidCosetMultiplier) {
  for (const Field& f : testing::property_fields()) EXPECT_TRUE(coset_multiplier_valid(f, f.theta()));
  for (const Field& f : {Field(11, 1), Field(13, 1), Field(2, 4), Field(5, 2)}) {
    EXPECT_TRUE(coset_multiplier_valid(f, f.theta()));
  }
}

// theta^m is valid exactly when (q + 1) does not divide m.
TEST(Constructions, ValidMultipliersAvoidTheSubfield) {
  for (const Field& f : testing::property_fields()) {
    for (std::int64_t m = 0; m < f.group_order(); ++m) {
      EXPECT_EQ(coset_multiplier_valid(f, f.power_of_theta(m)), m % (f.q() + 1) != 0);
    }
  }
  const Field f(3, 1);
  EXPECT_EQ(valid_m_values(f), (std::vector<std::int64_t>{1, 2, 3, 5, 6, 7}));
  EXPECT_EQ(code_of([&] { family_Blm(f, 2, 4); }), ErrorCode::InvalidBetaM);
  // A subfield multiplier fixes V, so the raw set collapses to a_l + V.
  for (std::size_t l = 1; l <= f.q(); ++l) {
    std::vector<Element> expect;
    for (Element x : f.trace_zero_set().elements) expect.push_back(f.add(trace_zero_label(f, l), x));
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(coset_Blm_unchecked(f, l, 4), expect);
  }
}

TEST(Constructions, FamiliesPartitionTheField) {
  for (const Field& f : testing::property_fields()) {
    std::vector<Element> all;
    for (std::size_t l = 1; l <= f.q(); ++l) {
      const auto b = family_B(f, l).elements;
      EXPECT_EQ(b.size(), f.q());
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, f.elements());
    for (std::int64_t m : valid_m_values(f)) {
      std::vector<Element> cover;
      for (std::size_t l = 1; l <= f.q(); ++l) {
        const auto b = family_Blm(f, l, m).elements;
        ASSERT_EQ(b.size(), f.q());
        cover.insert(cover.end(), b.begin(), b.end());
      }
      std::sort(cover.begin(), cover.end());
      ASSERT_EQ(cover, f.elements()) << "q=" << f.q() << " m=" << m;
    }
  }
}

TEST(Constructions, FamilySExamples) {
  for (const Field& f : testing::property_fields()) {
    const std::int64_t minus_one = f.dlog(f.neg(f.one()));
    auto v = f.trace_zero_set().elements;
    std::sort(v.begin(), v.end());
    EXPECT_EQ(family_S(f, minus_one, f.zero()).elements, v);
    auto sub = f.subfield_elements();
    std::sort(sub.begin(), sub.end());
    EXPECT_EQ(family_S(f, 0, f.zero()).elements, sub);
    // a = -1, b in F_q: exactly q elements, all of trace b.
    for (Element b : f.subfield_elements()) {
      const auto s = family_S(f, minus_one, b).elements;
      EXPECT_EQ(s.size(), f.q());
      for (Element x : s) EXPECT_EQ(f.trace(x), b);
    }
  }
  const Field f(3, 1);
  EXPECT_TRUE(family_S(f, 0, f.theta()).elements.empty());
}

TEST(Constructions, WorkedExamples) {
  const Field f(3, 1);
  const auto c1 = construct_theorem2(f, 1, 2, false);
  EXPECT_EQ(c1.code.length(), 2u);
  EXPECT_EQ(c1.code.k, 1u);
  EXPECT_EQ(min_distance_bruteforce(f, c1.code), 2u);
  const auto c2 = construct_theorem2(f, 2, 3, true);
  EXPECT_EQ(c2.code.length(), 4u);
  EXPECT_EQ(min_distance_bruteforce(f, c2.code), 3u);
  const auto c3 = construct_theorem3(f, 1, 1, 2, false);
  const auto b11 = family_Blm(f, 1, 1).elements;
  EXPECT_EQ(c3.code.locators, std::vector<Element>(b11.begin(), b11.begin() + 2));
  const auto c4 = construct_theorem3(f, 3, 1, 3, true);
  EXPECT_EQ(min_distance_bruteforce(f, c4.code), 3u);
  for (const auto* c : {&c1, &c2, &c3, &c4}) {
    EXPECT_TRUE(criterion_direct(f, c->code));
    EXPECT_TRUE(criterion_lemma(f, c->code));
  }
  const auto c5 = construct_theorem1(f, 4, f.zero(), 2, false);
  EXPECT_TRUE(criterion_direct(f, c5.code));
}

TEST(Constructions, DerivedExamples) {
  const Field f4(2, 2);
  for (std::size_t l = 1; l <= 4; ++l) {
    const auto c = construct_theorem2(f4, l, 4, false);
    EXPECT_TRUE(criterion_direct(f4, c.code));
    EXPECT_EQ(min_distance_bruteforce(f4, c.code), 3u);
  }
  const Field f5(5, 1);
  for (std::int64_t m : valid_m_values(f5)) {
    EXPECT_TRUE(criterion_direct(f5, construct_theorem3(f5, 2, m, 4, false).code));
  }
  // a = 1, b = 0 gives S = F_q.
  for (const Field& f : testing::property_fields()) {
    for (std::size_t n = 2; n <= f.q(); n += 2) {
      EXPECT_TRUE(criterion_direct(f, construct_theorem1(f, 0, f.zero(), n, false).code));
    }
  }
}

TEST(Constructions, HypothesisErrors) {
  const Field f(3, 1);
  EXPECT_EQ(code_of([&] { construct_theorem1(f, 1, f.zero(), 2, false); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([&] { construct_theorem2(f, 1, 4, false); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([&] { construct_theorem2(f, 1, 3, false); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([&] { construct_theorem2(f, 1, 2, true); }), ErrorCode::HypothesisViolated);
  EXPECT_EQ(code_of([&] { construct_theorem3(f, 1, 4, 2, false); }), ErrorCode::InvalidBetaM);
  const std::vector<Element> outside{f.one(), f.theta()};
  EXPECT_EQ(code_of([&] { construct_theorem2(f, 1, 2, false, outside); }), ErrorCode::NotInFamily);
  const std::vector<Element> inside{f.power_of_theta(6), f.zero()};
  EXPECT_TRUE(criterion_direct(f, construct_theorem2(f, 1, 2, false, inside).code));
}

// Every exponent of u_i lies in one class mod q + 1 on S.
TEST(Constructions, UExponentClassOnS) {
  for (const Field& f : testing::property_fields()) {
    const std::int64_t q = f.q();
    for (std::int64_t e = 0; e < f.group_order(); ++e) {
      for (Element b : f.elements()) {
        const auto s = family_S(f, e, b).elements;
        for (std::size_t n = 2; n <= s.size(); ++n) {
          if (e * (n - 1) % (q - 1) != 0) continue;
          const auto u = u_vector(f, std::vector<Element>(s.begin(), s.begin() + n)).u;
          const std::int64_t target = detail::mod_floor(-e * std::int64_t(n - 1) / (q - 1), q + 1);
          for (Element ui : u) ASSERT_EQ(std::int64_t(f.dlog(ui)) % (q + 1), target);
        }
      }
    }
  }
}

void check_witness(const Field& f, const Construction& c, std::mt19937_64& g) {
  const auto u = u_vector(f, c.code.locators).u;
  for (int t = 0; t < 10; ++t) {
    std::vector<Element> coeffs(c.code.k);
    for (auto& x : coeffs) x = testing::random_element(f, g);
    const Poly h(coeffs);
    const Poly gx = witness_polynomial(f, c, h);
    ASSERT_TRUE(gx.degree_at_most(c.code.k - 1));
    for (std::size_t i = 0; i < c.code.n(); ++i) {
      const Element a = c.code.locators[i];
      ASSERT_EQ(f.frobenius(a), f.add(f.mul(c.affine_a, a), c.affine_b));
      ASSERT_EQ(f.mul(u[i], eval(f, gx, a)),
                f.mul(f.norm(c.code.multipliers[i]), f.frobenius(eval(f, h, a))));
    }
    if (c.code.extended) {
      ASSERT_EQ(gx.coeff(c.code.k - 1), f.neg(f.frobenius(h.coeff(c.code.k - 1))));
    }
  }
}

TEST(Constructions, WitnessPolynomialIdentity) {
  auto g = testing::seeded_rng(40);
  for (const Field& f : testing::property_fields()) {
    for (bool ext : {false, true}) {
      for (std::size_t n = ext ? 1 : 2; n <= f.q(); n += 2) {
        for (std::size_t l = 1; l <= f.q(); ++l) {
          check_witness(f, construct_theorem2(f, l, n, ext), g);
          check_witness(f, construct_theorem3(f, l, 1, n, ext), g);
        }
        check_witness(f, construct_theorem1(f, 0, f.zero(), n, ext), g);
        check_witness(f, construct_theorem1(f, f.dlog(f.neg(f.one())), f.zero(), n, ext), g);
      }
    }
  }
}

}  // namespace
}  // namespace hgrs
