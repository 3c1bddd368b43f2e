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

// Arithmetic in F_{q^2} (q = p^m) and its subfield F_q.
//
// Elements are stored by their canonical index: the base-p digits of the
// index are the coefficients of the element in the polynomial basis
// 1, x, ..., x^{2m-1} of F_p[x]/(f). Index 0 is zero and index 1 is one.
// Multiplication goes through log/antilog tables of the primitive root
// theta = x mod f, addition through a Zech logarithm table.
//
// The defining polynomial f is the Conway polynomial C_{p,2m}: the first
// primitive polynomial in Conway's alternating-sign lexicographic order that
// is compatible with the Conway polynomials of every proper subfield. This
// fixes theta, and therefore every dlog printed by the tools, independently
// of the build.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgrs/error.hpp"

namespace hgrs {

struct Element {
  std::uint32_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Monic polynomial over F_p, coefficients in ascending degree.
using Modulus = std::vector<unsigned>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// p^e, or nullopt when the result would exceed `limit`.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned e,
                                                std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > limit / p) return std::nullopt;
    r *= p;
  }
  return r;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// Tables for F_p[x]/(f) when x is a primitive root of it.
struct PrimitiveTables {
  unsigned p = 0;
  unsigned degree = 0;
  std::uint32_t size = 0;               // p^degree
  std::vector<std::uint32_t> antilog;   // antilog[t] = index of x^t, t < size-1
  std::vector<std::uint32_t> log;       // log[index], log[0] unused
  std::vector<std::uint32_t> place;     // p^i

  std::uint32_t digit(std::uint32_t idx, unsigned i) const { return idx / place[i] % p; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < degree; ++i) {
      r += (digit(a, i) + digit(b, i)) % p * place[i];
    }
    return r;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t group = size - 1;
    return antilog[(log[a] + log[b]) % group];
  }

  std::uint32_t pow_root(std::uint64_t e) const { return antilog[e % (size - 1)]; }
};

// Builds the tables if x has multiplicative order exactly p^n - 1 modulo f,
// which also proves f irreducible.
inline std::optional<PrimitiveTables> primitive_tables(unsigned p, const Modulus& f) {
  PrimitiveTables t;
  t.p = p;
  t.degree = static_cast<unsigned>(f.size() - 1);
  t.place.resize(t.degree + 1);
  t.place[0] = 1;
  for (unsigned i = 1; i <= t.degree; ++i) t.place[i] = t.place[i - 1] * p;
  t.size = t.place[t.degree];
  const std::uint32_t group = t.size - 1;
  t.antilog.assign(group, 0);
  t.log.assign(t.size, 0);
  std::vector<bool> seen(t.size, false);

  std::vector<unsigned> digits(t.degree, 0);
  digits[0] = 1;
  auto encode = [&] {
    std::uint32_t idx = 0;
    for (unsigned i = 0; i < t.degree; ++i) idx += digits[i] * t.place[i];
    return idx;
  };
  for (std::uint32_t e = 0; e < group; ++e) {
    const std::uint32_t idx = encode();
    if (idx == 0 || seen[idx]) return std::nullopt;
    seen[idx] = true;
    t.antilog[e] = idx;
    t.log[idx] = e;
    // multiply by x and reduce with x^n = -sum f_i x^i
    const unsigned carry = digits[t.degree - 1];
    for (unsigned i = t.degree - 1; i > 0; --i) digits[i] = digits[i - 1];
    digits[0] = 0;
    for (unsigned i = 0; i < t.degree; ++i) {
      digits[i] = (digits[i] + p - carry * f[i] % p) % p;
    }
  }
  if (encode() != 1) return std::nullopt;
  return t;
}

Modulus conway_polynomial(unsigned p, unsigned n);

inline Modulus search_conway_polynomial(unsigned p, unsigned n) {
  std::vector<std::pair<unsigned, Modulus>> subfields;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) subfields.emplace_back(d, conway_polynomial(p, d));
  }
  const std::uint64_t count = *checked_pow(p, n, std::numeric_limits<std::uint32_t>::max());
  // Candidate x^n - a_{n-1} x^{n-1} + a_{n-2} x^{n-2} - ... ordered
  // lexicographically by (a_{n-1}, ..., a_0).
  for (std::uint64_t c = 0; c < count; ++c) {
    Modulus f(n + 1, 0);
    f[n] = 1;
    std::uint64_t rest = c;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned alpha = static_cast<unsigned>(rest % p);
      rest /= p;
      f[i] = ((n - i) % 2 == 0) ? alpha : (p - alpha) % p;
    }
    if (f[0] == 0) continue;
    auto tables = primitive_tables(p, f);
    if (!tables) continue;
    bool compatible = true;
    for (const auto& [d, sub] : subfields) {
      const std::uint64_t sub_size = *checked_pow(p, d, count);
      const std::uint32_t root = tables->pow_root((count - 1) / (sub_size - 1));
      std::uint32_t acc = 0;
      for (auto it = sub.rbegin(); it != sub.rend(); ++it) {
        acc = tables->add(tables->mul(acc, root), *it);
      }
      if (acc != 0) {
        compatible = false;
        break;
      }
    }
    if (compatible) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "no Conway polynomial found");
}

inline Modulus conway_polynomial(unsigned p, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, Modulus> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({p, n}); it != cache.end()) return it->second;
  }
  Modulus f = search_conway_polynomial(p, n);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(p, n), f);
  return f;
}

}  // namespace detail

/// The q elements of V = ker Tr, zero first, the rest by increasing dlog.
struct TraceZeroSet {
  std::vector<Element> elements;
};

/// F_{q^2} with q = p^m. Immutable after construction; share by const
/// reference across threads.
class Field {
 public:
  static constexpr std::uint64_t kDefaultTableBound = std::uint64_t{1} << 16;

  Field(unsigned p, unsigned m, std::uint64_t table_bound = kDefaultTableBound) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (!detail::is_prime(p)) {
      throw Error(ErrorCode::CompositeCharacteristic, std::to_string(p) + " is not prime");
    }
    const auto order = detail::checked_pow(p, 2 * m, table_bound);
    if (!order) {
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(2 * m) + " exceeds table bound " +
                      std::to_string(table_bound));
    }
    p_ = p;
    m_ = m;
    order_ = static_cast<std::uint32_t>(*order);
    q_ = static_cast<std::uint32_t>(*detail::checked_pow(p, m, table_bound));
    group_ = order_ - 1;
    modulus_ = detail::conway_polynomial(p, 2 * m);
    auto tables = detail::primitive_tables(p, modulus_);
    antilog_ = std::move(tables->antilog);
    log_ = std::move(tables->log);
    place_ = std::move(tables->place);

    neg_.resize(order_);
    for (std::uint32_t x = 0; x < order_; ++x) {
      std::uint32_t r = 0;
      for (unsigned i = 0; i < 2 * m_; ++i) r += (p_ - digit(x, i)) % p_ * place_[i];
      neg_[x] = r;
    }
    // zech_[t] = log(1 + theta^t), kNoLog when 1 + theta^t = 0
    zech_.resize(group_);
    for (std::uint32_t t = 0; t < group_; ++t) {
      const std::uint32_t x = antilog_[t];
      const std::uint32_t s = x - digit(x, 0) + (digit(x, 0) + 1) % p_;
      zech_[t] = s == 0 ? kNoLog : log_[s];
    }
  }

  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return m_; }
  /// q, the order of the subfield.
  std::uint32_t q() const { return q_; }
  /// q^2, the number of elements.
  std::uint32_t order() const { return order_; }
  /// q^2 - 1, the order of the multiplicative group.
  std::uint32_t group_order() const { return group_; }
  const Modulus& modulus() const { return modulus_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element theta() const { return {antilog_[1 % group_]}; }
  /// theta^t for any integer t.
  Element power_of_theta(std::int64_t t) const {
    return {antilog_[detail::mod_floor(t, group_)]};
  }
  /// The image of the integer c in the prime field.
  Element from_int(std::int64_t c) const {
    return {static_cast<std::uint32_t>(detail::mod_floor(c, p_))};
  }
  Element from_index(std::uint32_t index) const {
    if (index >= order_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return {index};
  }

  Element add(Element x, Element y) const {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const std::uint32_t a = log_[x.value];
    const std::uint32_t b = log_[y.value];
    const std::uint32_t z = zech_[(b + group_ - a) % group_];
    if (z == kNoLog) return {0};
    return {antilog_[(a + z) % group_]};
  }
  Element neg(Element x) const { return {neg_[x.value]}; }
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  Element mul(Element x, Element y) const {
    if (x.is_zero() || y.is_zero()) return {0};
    return {antilog_[(log_[x.value] + log_[y.value]) % group_]};
  }
  Element inv(Element x) const {
    if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return {antilog_[(group_ - log_[x.value]) % group_]};
  }
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  /// x^e for any integer e; 0^0 = 1, negative powers of zero throw.
  Element pow(Element x, std::int64_t e) const {
    if (x.is_zero()) {
      if (e == 0) return one();
      if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
      return zero();
    }
    const std::int64_t t = detail::mod_floor(e, group_);
    return {antilog_[(static_cast<std::uint64_t>(log_[x.value]) * t) % group_]};
  }

  /// x^q, the generator of Gal(F_{q^2}/F_q).
  Element frobenius(Element x) const {
    if (x.is_zero()) return x;
    return {antilog_[(static_cast<std::uint64_t>(log_[x.value]) * q_) % group_]};
  }
  /// x + x^q.
  Element trace(Element x) const { return add(x, frobenius(x)); }
  /// x^{q+1}.
  Element norm(Element x) const { return pow(x, std::int64_t{q_} + 1); }
  bool in_subfield(Element x) const { return frobenius(x) == x; }

  std::uint32_t dlog(Element x) const {
    if (x.is_zero()) throw Error(ErrorCode::LogOfZero, "dlog of zero");
    return log_[x.value];
  }

  /// Some xi with xi^{q+1} = c: theta^s for the smallest s >= 0 with
  /// s(q+1) = dlog(c) mod q^2-1.
  Element solve_norm(Element c) const {
    if (c.is_zero() || !in_subfield(c)) {
      throw Error(ErrorCode::NotInSubfield, "norm equation needs c in F_q^*");
    }
    const std::uint32_t t = dlog(c);
    const std::uint32_t step = q_ + 1;
    if (t % step != 0) throw Error(ErrorCode::NoSolution, "norm preimage missing");
    return power_of_theta(t / step);
  }

  TraceZeroSet trace_zero_set() const {
    TraceZeroSet v;
    v.elements.push_back(zero());
    for (std::uint32_t t = 0; t < group_; ++t) {
      const Element x{antilog_[t]};
      if (trace(x).is_zero()) v.elements.push_back(x);
    }
    return v;
  }

  /// (e0, e1) in F_q x F_q with x = e0 + theta * e1.
  std::pair<Element, Element> subfield_coords(Element x) const {
    const Element th = theta();
    const Element e1 = div(sub(x, frobenius(x)), sub(th, frobenius(th)));
    return {sub(x, mul(th, e1)), e1};
  }

  /// Every element in canonical (index) order.
  std::vector<Element> elements() const {
    std::vector<Element> all(order_);
    for (std::uint32_t i = 0; i < order_; ++i) all[i] = {i};
    return all;
  }
  std::vector<Element> nonzero_elements() const {
    std::vector<Element> all(group_);
    for (std::uint32_t i = 0; i < group_; ++i) all[i] = {i + 1};
    return all;
  }
  /// F_q in canonical order.
  std::vector<Element> subfield_elements() const {
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < order_; ++i) {
      if (in_subfield({i})) out.push_back({i});
    }
    return out;
  }

  /// Text record "p m c_0 c_1 ... c_{2m}".
  std::string record() const {
    std::ostringstream os;
    os << p_ << ' ' << m_;
    for (unsigned c : modulus_) os << ' ' << c;
    return os.str();
  }

  /// "0" or "θ^k".
  std::string format(Element x) const {
    if (x.is_zero()) return "0";
    return "θ^" + std::to_string(dlog(x));
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  static constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t digit(std::uint32_t idx, unsigned i) const { return idx / place_[i] % p_; }

  unsigned p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t group_ = 0;
  Modulus modulus_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> place_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> zech_;
};

inline Field make_field(unsigned p, unsigned m,
                        std::uint64_t table_bound = Field::kDefaultTableBound) {
  return Field(p, m, table_bound);
}

/// Inverse of Field::record(). The modulus must be the one make_field picks.
inline Field parse_field_record(const std::string& text) {
  std::istringstream is(text);
  unsigned p = 0, m = 0;
  if (!(is >> p >> m)) throw Error(ErrorCode::ParseError, "bad field record '" + text + "'");
  Field field(p, m);
  Modulus coeffs;
  unsigned c = 0;
  while (is >> c) coeffs.push_back(c);
  if (!coeffs.empty() && coeffs != field.modulus()) {
    throw Error(ErrorCode::ParseError, "field record modulus does not match " + field.record());
  }
  return field;
}

}  // namespace hgrs
