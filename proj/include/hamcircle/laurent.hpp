#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"

namespace hc {

// sum_k c[k] t^(low + k), trimmed so c.front() and c.back() are nonzero.
struct LaurentPolynomial {
  long low = 0;
  std::vector<Int> c;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Int& k) {  // NOLINT: constants convert implicitly
    if (k != 0) c.push_back(k);
  }
  LaurentPolynomial(long k) : LaurentPolynomial(Int(k)) {}  // NOLINT
  static LaurentPolynomial monomial(const Int& coef, long e) {
    LaurentPolynomial p(coef);
    p.low = coef == 0 ? 0 : e;
    return p;
  }
  // 1 - t^e
  static LaurentPolynomial one_minus_t(long e) {
    return LaurentPolynomial(1L) - monomial(1, e);
  }

  bool zero() const { return c.empty(); }
  long high() const { return low + static_cast<long>(c.size()) - 1; }
  Int coeff(long e) const {
    if (e < low || e > high()) return 0;
    return c[e - low];
  }
  void trim() {
    size_t a = 0;
    while (a < c.size() && c[a] == 0) ++a;
    if (a == c.size()) {
      c.clear();
      low = 0;
      return;
    }
    size_t b = c.size();
    while (c[b - 1] == 0) --b;
    c = std::vector<Int>(c.begin() + a, c.begin() + b);
    low += static_cast<long>(a);
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    if (x.zero()) return y;
    if (y.zero()) return x;
    LaurentPolynomial r;
    r.low = std::min(x.low, y.low);
    long hi = std::max(x.high(), y.high());
    r.c.assign(hi - r.low + 1, 0);
    for (size_t k = 0; k < x.c.size(); ++k) r.c[x.low - r.low + k] += x.c[k];
    for (size_t k = 0; k < y.c.size(); ++k) r.c[y.low - r.low + k] += y.c[k];
    r.trim();
    return r;
  }
  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    return x + (-y);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& x, const LaurentPolynomial& y) {
    if (x.zero() || y.zero()) return {};
    LaurentPolynomial r;
    r.low = x.low + y.low;
    r.c.assign(x.c.size() + y.c.size() - 1, 0);
    for (size_t i = 0; i < x.c.size(); ++i) {
      if (x.c[i] == 0) continue;
      for (size_t j = 0; j < y.c.size(); ++j) r.c[i + j] += x.c[i] * y.c[j];
    }
    r.trim();
    return r;
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& y) { return *this = *this + y; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& y) { return *this = *this * y; }
  bool operator==(const LaurentPolynomial& o) const { return low == o.low && c == o.c; }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  LaurentPolynomial shift(long e) const {
    LaurentPolynomial r = *this;
    if (!r.zero()) r.low += e;
    return r;
  }
  // t -> t^{-1}
  LaurentPolynomial invert() const {
    LaurentPolynomial r;
    if (zero()) return r;
    r.c.assign(c.rbegin(), c.rend());
    r.low = -high();
    return r;
  }
  Int at_one() const {
    Int s = 0;
    for (const auto& x : c) s += x;
    return s;
  }
  Rat at(const Rat& t) const {
    Rat s = 0, p = 1;
    if (zero()) return s;
    Rat base = t;
    long e = low;
    if (e < 0) {
      base = 1 / t;
      e = -e;
    }
    Rat start = 1;
    for (long k = 0; k < e; ++k) start *= base;
    p = start;
    for (const auto& x : c) {
      s += p * x;
      p *= t;
    }
    return s;
  }
  std::string str() const {
    if (zero()) return "0";
    std::string s;
    for (long k = static_cast<long>(c.size()) - 1; k >= 0; --k) {
      if (c[k] == 0) continue;
      if (!s.empty()) s += c[k] > 0 ? " + " : " - ";
      else if (c[k] < 0) s += "-";
      Int a = abs(c[k]);
      long e = low + k;
      if (a != 1 || e == 0) s += a.get_str();
      if (e != 0) s += (a != 1 ? "*" : std::string()) + "t" + (e != 1 ? "^" + std::to_string(e) : "");
    }
    return s;
  }
};

namespace detail {

// Polynomial long division over Q on dense coefficient vectors (index = degree).
inline void poly_divmod(std::vector<Rat> a, const std::vector<Rat>& b, std::vector<Rat>& q,
                        std::vector<Rat>& r) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (long k = static_cast<long>(a.size()) - 1; k >= static_cast<long>(b.size()) - 1; --k) {
    if (a[k] == 0) continue;
    Rat f = a[k] / b.back();
    long s = k - static_cast<long>(b.size()) + 1;
    q[s] = f;
    for (size_t j = 0; j < b.size(); ++j) a[s + j] -= f * b[j];
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  r = std::move(a);
}

inline std::vector<Rat> dense(const LaurentPolynomial& p) {
  std::vector<Rat> v;
  for (const auto& x : p.c) v.emplace_back(x);
  return v;
}

}  // namespace detail

// Exact quotient x / y if it is a Laurent polynomial with integer coefficients.
inline std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& x,
                                                     const LaurentPolynomial& y) {
  if (y.zero()) return std::nullopt;
  if (x.zero()) return LaurentPolynomial();
  std::vector<Rat> q, r;
  detail::poly_divmod(detail::dense(x), detail::dense(y), q, r);
  if (!r.empty()) return std::nullopt;
  LaurentPolynomial out;
  out.low = x.low - y.low;
  for (const auto& v : q) {
    if (!is_integer(v)) return std::nullopt;
    out.c.push_back(v.get_num());
  }
  out.trim();
  return out;
}

// Numerator / denominator with the common t-power, the polynomial gcd over Q
// and the integer content removed; denominator leading coefficient positive.
struct LaurentRational {
  LaurentPolynomial num, den;

  static LaurentRational make(LaurentPolynomial n, LaurentPolynomial d) {
    if (d.zero()) throw Error(ErrorKind::Precondition, "zero denominator");
    LaurentRational r;
    if (n.zero()) {
      r.den = LaurentPolynomial(1L);
      return r;
    }
    long shift = n.low - d.low;
    n.low = 0;
    d.low = 0;
    // gcd over Q by Euclid
    std::vector<Rat> a = detail::dense(n), b = detail::dense(d);
    while (!b.empty()) {
      std::vector<Rat> q, rem;
      detail::poly_divmod(a, b, q, rem);
      a = std::move(b);
      b = std::move(rem);
    }
    std::vector<Rat> g = a, qn, qd, rem;
    detail::poly_divmod(detail::dense(n), g, qn, rem);
    detail::poly_divmod(detail::dense(d), g, qd, rem);
    auto to_int = [](std::vector<Rat>& v, Int& den) {
      den = 1;
      for (const auto& x : v) den = lcm(den, x.get_den());
    };
    Int ln, ld;
    to_int(qn, ln);
    to_int(qd, ld);
    Int L = lcm(ln, ld);
    LaurentPolynomial N, D;
    for (const auto& x : qn) N.c.push_back(Rat(x * L).get_num());
    for (const auto& x : qd) D.c.push_back(Rat(x * L).get_num());
    Int cg = 0;
    for (const auto& x : N.c) cg = gcd(cg, x);
    for (const auto& x : D.c) cg = gcd(cg, x);
    if (D.c.back() < 0) cg = -cg;
    for (auto& x : N.c) x /= cg;
    for (auto& x : D.c) x /= cg;
    N.trim();
    D.trim();
    // keep the denominator's lowest exponent at 0
    N.low += shift - D.low;
    D.low = 0;
    r.num = std::move(N);
    r.den = std::move(D);
    return r;
  }
  friend LaurentRational operator+(const LaurentRational& x, const LaurentRational& y) {
    return make(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  bool operator==(const LaurentRational& o) const { return num == o.num && den == o.den; }
  std::optional<LaurentPolynomial> as_polynomial() const { return divide_exact(num, den); }
};

}  // namespace hc
