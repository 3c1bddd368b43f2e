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

// Dense linear algebra over F_{q^2}, and the search for solutions of a
// linear system that lie in (F_q^*)^n.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hgrs/error.hpp"
#include "hgrs/field.hpp"

namespace hgrs {

using Vector = std::vector<Element>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Element>& entries() const { return data_; }

  bool is_zero() const {
    for (Element e : data_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

inline bool is_zero_vector(std::span<const Element> v) {
  for (Element e : v) {
    if (!e.is_zero()) return false;
  }
  return true;
}

inline Vector multiply(const Field& field, const Matrix& m, std::span<const Element> x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size");
  Vector out(m.rows(), field.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Element acc = field.zero();
    for (std::size_t c = 0; c < m.cols(); ++c) acc = field.add(acc, field.mul(m(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Only the first `limit_cols` columns are used as
/// pivot candidates (all columns by default), which lets an augmented matrix
/// keep its right-hand side out of the pivot search.
inline RrefResult rref(const Field& field, Matrix m, std::size_t limit_cols = SIZE_MAX) {
  RrefResult out;
  const std::size_t cols = std::min(limit_cols, m.cols());
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < m.rows(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(pivot_row, k));
    }
    const Element scale = field.inv(m(pivot_row, c));
    for (std::size_t k = 0; k < m.cols(); ++k) m(pivot_row, k) = field.mul(m(pivot_row, k), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const Element factor = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) {
        m(r, k) = field.sub(m(r, k), field.mul(factor, m(pivot_row, k)));
      }
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Field& field, const Matrix& m) { return rref(field, m).rank; }

/// Basis of {x : Mx = 0}, one vector per free column (1 there, 0 at the
/// other free columns).
inline std::vector<Vector> null_space(const Field& field, const Matrix& m) {
  const RrefResult r = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), field.zero());
    v[f] = field.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = field.neg(r.reduced(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix augment(const Matrix& m, std::span<const Element> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  return aug;
}

/// A solution of Mx = b with every free variable set to zero, or nullopt
/// when the system is inconsistent.
inline std::optional<Vector> solve_linear(const Field& field, const Matrix& m,
                                          std::span<const Element> b) {
  const RrefResult r = rref(field, augment(m, b), m.cols());
  for (std::size_t i = r.rank; i < m.rows(); ++i) {
    if (!r.reduced(i, m.cols()).is_zero()) return std::nullopt;
  }
  Vector x(m.cols(), field.zero());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, m.cols());
  return x;
}

struct SplitSystem {
  Matrix matrix;
  Vector rhs;
};

/// Rewrites Mx = b over F_{q^2} as a system over F_q in the basis {1, theta}:
/// rows 0..r-1 carry the 1-coordinates, rows r..2r-1 the theta-coordinates.
/// Its F_q-solutions are exactly the F_q-valued solutions of Mx = b.
inline SplitSystem split_to_subfield(const Field& field, const Matrix& m,
                                     std::span<const Element> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length");
  const std::size_t r = m.rows();
  SplitSystem out{Matrix(2 * r, m.cols()), Vector(2 * r, field.zero())};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto [e0, e1] = field.subfield_coords(m(i, c));
      out.matrix(i, c) = e0;
      out.matrix(r + i, c) = e1;
    }
    const auto [b0, b1] = field.subfield_coords(b[i]);
    out.rhs[i] = b0;
    out.rhs[r + i] = b1;
  }
  return out;
}

struct SubfieldSolution {
  Vector x;
  /// Mx = b holds exactly and every x_i is a nonzero element of F_q.
  bool certificate = false;
};

struct SubfieldSearchLimits {
  std::size_t max_cols = 24;
  /// Upper bound on (q-1)^nullity, the number of coset points visited.
  std::uint64_t budget = 10'000'000;
};

inline bool verify_subfield_solution(const Field& field, const Matrix& m,
                                     std::span<const Element> b, std::span<const Element> x) {
  for (Element e : x) {
    if (e.is_zero() || !field.in_subfield(e)) return false;
  }
  return multiply(field, m, x) == Vector(b.begin(), b.end());
}

/// Finds the lexicographically smallest x in (F_q^*)^n with Mx = b, or
/// proves that none exists. The F_q-split system is reduced once; the free
/// coordinates range over F_q^* and each pivot coordinate is checked for
/// zero as soon as the free coordinates it depends on are fixed.
inline std::optional<SubfieldSolution> solve_in_subfield_nonzero(
    const Field& field, const Matrix& m, std::span<const Element> b,
    const SubfieldSearchLimits& limits = {}) {
  const std::size_t n = m.cols();
  if (n > limits.max_cols) {
    throw Error(ErrorCode::EnumerationBudgetExceeded,
                std::to_string(n) + " unknowns exceed the column guard");
  }
  const SplitSystem split = split_to_subfield(field, m, b);
  const RrefResult r = rref(field, augment(split.matrix, split.rhs), n);
  for (std::size_t i = r.rank; i < split.matrix.rows(); ++i) {
    if (!r.reduced(i, n).is_zero()) return std::nullopt;
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;  // descending
  for (std::size_t c = n; c-- > 0;) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  std::vector<Element> units;
  for (Element e : field.subfield_elements()) {
    if (!e.is_zero()) units.push_back(e);
  }
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    points *= units.size();
    if (points > limits.budget) {
      throw Error(ErrorCode::EnumerationBudgetExceeded,
                  "coset of dimension " + std::to_string(free_cols.size()) + " over F_" +
                      std::to_string(field.q()) + " exceeds budget");
    }
  }

  // Pivot rows become fully determined after the free column with the
  // smallest index among their nonzero coefficients is assigned.
  std::vector<std::vector<std::size_t>> ready_after(free_cols.size() + 1);
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t depth = 0;
    for (std::size_t d = 0; d < free_cols.size(); ++d) {
      if (!r.reduced(i, free_cols[d]).is_zero()) depth = d + 1;
    }
    ready_after[depth].push_back(i);
  }

  Vector x(n, field.zero());
  std::optional<Vector> best;
  auto pivot_value = [&](std::size_t i) {
    Element v = r.reduced(i, n);
    for (std::size_t f : free_cols) v = field.sub(v, field.mul(r.reduced(i, f), x[f]));
    return v;
  };
  auto check_ready = [&](std::size_t depth) {
    for (std::size_t i : ready_after[depth]) {
      const Element v = pivot_value(i);
      if (v.is_zero()) return false;
      x[r.pivot_cols[i]] = v;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == free_cols.size()) {
      if (!best || x < *best) best = x;
      return;
    }
    for (Element u : units) {
      x[free_cols[depth]] = u;
      if (check_ready(depth + 1)) self(self, depth + 1);
    }
  };
  if (check_ready(0)) dfs(dfs, 0);
  if (!best) return std::nullopt;

  SubfieldSolution sol{*best, verify_subfield_solution(field, m, b, *best)};
  return sol;
}

}  // namespace hgrs
