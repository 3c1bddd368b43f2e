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

#include "support.hpp"

namespace hgrs {
namespace {

TEST(Grs, UVectorExamples) {
  const Field f(3, 1);
  const std::vector<Element> a{f.zero(), f.power_of_theta(2)};
  const auto u = u_vector(f, a).u;
  EXPECT_EQ(u, (std::vector<Element>{f.power_of_theta(2), f.power_of_theta(6)}));
  EXPECT_EQ(u_vector(f, std::vector<Element>{f.theta()}).u, std::vector<Element>{f.one()});
  const std::vector<Element> dup{f.one(), f.one()};
  try {
    u_vector(f, dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateLocator);
  }
}

TEST(Grs, GeneratorMatrixAndEncoding) {
  const Field f(3, 1);
  const CodeSpec plain{{f.zero(), f.one()}, {f.one(), f.one()}, 1, false};
  const Matrix g = generator_matrix(f, plain);
  EXPECT_EQ(g.rows(), 1u);
  EXPECT_EQ(g(0, 0), f.one());
  EXPECT_EQ(g(0, 1), f.one());

  const CodeSpec ext{{f.theta()}, {f.power_of_theta(3)}, 1, true};
  const Matrix ge = generator_matrix(f, ext);
  EXPECT_EQ(ge.cols(), 2u);
  EXPECT_EQ(ge(0, 0), f.power_of_theta(3));
  EXPECT_EQ(ge(0, 1), f.one());

  const CodeSpec c{{f.zero(), f.one(), f.theta(), f.power_of_theta(5)},
                   {f.one(), f.theta(), f.power_of_theta(2), f.power_of_theta(7)}, 2, true};
  EXPECT_TRUE(is_zero_vector(encode(f, c, Poly(std::vector<Element>{}))));
  const Vector w = encode(f, c, Poly::monomial(f, 1, f.one()));
  EXPECT_EQ(w.back(), f.one());
  const Vector v = encode(f, c, Poly::constant(f.one()));
  EXPECT_EQ(Vector(v.begin(), v.end() - 1), c.multipliers);
  EXPECT_EQ(v.back(), f.zero());
  try {
    encode(f, c, Poly::monomial(f, 2, f.one()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooHigh);
  }
}

TEST(Grs, HermitianGram) {
  const Field f(3, 1);
  const CodeSpec c{{f.zero(), f.power_of_theta(2)}, {f.one(), f.theta()}, 1, false};
  EXPECT_TRUE(hermitian_gram(f, c).is_zero());
  const CodeSpec d{{f.zero(), f.power_of_theta(2)}, {f.one(), f.one()}, 1, false};
  EXPECT_EQ(hermitian_gram(f, d)(0, 0), f.from_int(2));
  for (Element v : f.nonzero_elements()) {
    const CodeSpec e{{f.theta()}, {v}, 1, true};
    EXPECT_EQ(hermitian_gram(f, e)(0, 0), f.add(f.norm(v), f.one()));
  }
}

TEST(Grs, MinimumDistance) {
  const Field f(3, 1);
  const CodeSpec c{{f.zero(), f.one()}, {f.one(), f.theta()}, 1, false};
  EXPECT_EQ(min_distance_bruteforce(f, c), 2u);
  const auto built = construct_theorem2(f, 2, 3, true);
  EXPECT_EQ(min_distance_bruteforce(f, built.code), 3u);
  EXPECT_TRUE(is_mds(f, built.code));
  try {
    min_distance_bruteforce(f, built.code, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EnumerationBudgetExceeded);
  }
}

TEST(Grs, MdsChecksAgreeOnRandomMatrices) {
  auto g = testing::seeded_rng(20);
  const Field f(2, 2);
  int mds = 0, not_mds = 0;
  for (int t = 0; t < 300; ++t) {
    Matrix m(2, 4);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = testing::random_element(f, g);
    }
    // is_mds throws logic_error when the two methods disagree.
    (is_mds(f, m) ? mds : not_mds)++;
  }
  EXPECT_GT(mds, 0);
  EXPECT_GT(not_mds, 0);
}

TEST(Grs, GrsCodesAreMds) {
  auto g = testing::seeded_rng(21);
  for (const Field& f : {Field(3, 1), Field(2, 2), Field(5, 1)}) {
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 2 + g() % 5;
      CodeSpec c{testing::random_distinct(f, n, g), {}, 1 + g() % n, g() % 2 == 0};
      for (std::size_t i = 0; i < n; ++i) c.multipliers.push_back(testing::random_nonzero(f, g));
      EXPECT_TRUE(is_mds(f, c));
    }
  }
}

TEST(Grs, Validation) {
  const Field f(3, 1);
  const CodeSpec zero_mult{{f.zero(), f.one()}, {f.one(), f.zero()}, 1, false};
  EXPECT_THROW(generator_matrix(f, zero_mult), Error);
  const CodeSpec bad_k{{f.zero(), f.one()}, {f.one(), f.one()}, 3, false};
  EXPECT_THROW(generator_matrix(f, bad_k), Error);
}

}  // namespace
}  // namespace hgrs
