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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hgrs/hgrs.hpp"

namespace hgrs::testing {

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eedULL ^ salt); }

inline Element random_element(const Field& f, std::mt19937_64& g) {
  return f.from_index(std::uniform_int_distribution<std::uint32_t>(0, f.order() - 1)(g));
}

inline Element random_nonzero(const Field& f, std::mt19937_64& g) {
  return f.from_index(std::uniform_int_distribution<std::uint32_t>(1, f.order() - 1)(g));
}

inline std::vector<Element> random_distinct(const Field& f, std::size_t n, std::mt19937_64& g) {
  std::vector<Element> all = f.elements();
  std::shuffle(all.begin(), all.end(), g);
  all.resize(n);
  return all;
}

/// The fields F_{q^2} with q in {3, 4, 5, 7, 8, 9}.
inline std::vector<Field> property_fields() {
  return {Field(3, 1), Field(2, 2), Field(5, 1), Field(7, 1), Field(2, 3), Field(3, 2)};
}

/// Every v in (F_{q^2}^*)^n, as a callback; stops when fn returns false.
template <class Fn>
void for_each_unit_vector(const Field& f, std::size_t n, Fn&& fn) {
  const auto units = f.nonzero_elements();
  std::vector<std::size_t> idx(n, 0);
  std::vector<Element> v(n, units[0]);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) v[i] = units[idx[i]];
    if (!fn(v)) return;
    std::size_t i = 0;
    while (i < n && ++idx[i] == units.size()) idx[i++] = 0;
    if (i == n) return;
  }
}

// Lexicographically smallest x in (F_q^*)^n with Mx = b, by full enumeration.
inline std::optional<Vector> subfield_bruteforce(const Field& f, const Matrix& m, const Vector& b) {
  std::vector<Element> units;
  for (Element e : f.subfield_elements()) {
    if (!e.is_zero()) units.push_back(e);
  }
  std::sort(units.begin(), units.end());
  const std::size_t n = m.cols();
  std::vector<std::size_t> idx(n, 0);
  Vector x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = units[idx[n - 1 - i]];
    if (multiply(f, m, x) == b) return x;
    std::size_t i = 0;
    while (i < n && ++idx[i] == units.size()) idx[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

}  // namespace hgrs::testing
