#pragma once

#include <optional>
#include <set>
#include <vector>

#include "core.hpp"
#include "laurent.hpp"

namespace hc {

// sum_i num_i / prod_k (1 - t^{sign * w_ik}), divided out exactly.
inline LaurentPolynomial fixed_point_sum(const std::vector<LaurentPolynomial>& num,
                                         const WeightSystem& ws, int sign) {
  if (static_cast<int>(num.size()) != ws.points())
    throw Error(ErrorKind::Precondition, "one value per fixed point expected");
  std::vector<LaurentPolynomial> den(ws.points(), LaurentPolynomial(1L));
  for (int i = 0; i < ws.points(); ++i)
    for (const auto& w : ws.weights[i]) den[i] *= LaurentPolynomial::one_minus_t(sign * to_i64(w));
  LaurentPolynomial N, D(1L);
  for (int i = 0; i < ws.points(); ++i) {
    LaurentPolynomial term = num[i];
    for (int j = 0; j < ws.points(); ++j)
      if (j != i) term *= den[j];
    N += term;
    D *= den[i];
  }
  auto q = divide_exact(N, D);
  if (!q) throw Error(ErrorKind::NotLaurent, "fixed-point sum is not a Laurent polynomial");
  return *q;
}

inline LaurentPolynomial as_index(const std::vector<LaurentPolynomial>& values, const WeightSystem& ws) {
  return fixed_point_sum(values, ws, -1);
}

struct LevelData {
  std::vector<Int> a;
  long k0 = 0;
  Int d;
};

// sum_k w_ik = k0 a_i + d. d is the least non-negative residue unless an anchor
// point is given, in which case a_anchor = 0.
inline std::optional<LevelData> derive_levels(const WeightSystem& ws, long k0,
                                              std::optional<int> anchor = std::nullopt) {
  if (k0 < 1) throw Error(ErrorKind::Precondition, "k0 must be positive");
  Int K = k0;
  Int r0 = ws.sum(0) % K;
  if (r0 < 0) r0 += K;
  for (int i = 1; i < ws.points(); ++i) {
    Int r = ws.sum(i) % K;
    if (r < 0) r += K;
    if (r != r0) return std::nullopt;
  }
  LevelData L;
  L.k0 = k0;
  L.d = anchor ? ws.sum(*anchor) : r0;
  std::set<Int> seen;
  for (int i = 0; i < ws.points(); ++i) {
    L.a.push_back((ws.sum(i) - L.d) / K);
    if (!seen.insert(L.a.back()).second) return std::nullopt;  // not fine
  }
  return L;
}

inline void require_fine(const LevelData& L) {
  std::set<Int> s(L.a.begin(), L.a.end());
  if (s.size() != L.a.size()) throw Error(ErrorKind::Precondition, "levels are not pairwise distinct");
}

inline LaurentPolynomial phi(const WeightSystem& ws, const LevelData& L, int i) {
  require_fine(L);
  LaurentPolynomial num(1L), den(1L);
  for (int j = 0; j < ws.points(); ++j)
    if (j != i) num *= LaurentPolynomial::one_minus_t(to_i64(L.a[i] - L.a[j]));
  for (const auto& w : ws.weights[i]) den *= LaurentPolynomial::one_minus_t(to_i64(w));
  auto q = divide_exact(num, den);
  if (!q) throw Error(ErrorKind::NotLaurent, "phi_" + std::to_string(i) + " is not Laurent");
  return *q;
}

// e_s of the monomials t^{-a_j}, j != i.
inline LaurentPolynomial level_symmetric(const LevelData& L, int i, int s) {
  std::vector<LaurentPolynomial> e(s + 1);
  e[0] = LaurentPolynomial(1L);
  for (int j = 0; j < static_cast<int>(L.a.size()); ++j) {
    if (j == i) continue;
    auto m = LaurentPolynomial::monomial(1, -to_i64(L.a[j]));
    for (int k = s; k >= 1; --k) e[k] += e[k - 1] * m;
  }
  return e[s];
}

struct HattoriData {
  std::vector<LaurentPolynomial> r;
  std::vector<Int> r_at_1;
  bool consistent = true;
};

inline HattoriData r_sequence(const WeightSystem& ws, const LevelData& L) {
  require_fine(L);
  int N = ws.profile.N();
  HattoriData h;
  for (int s = 0; s <= N; ++s) {
    std::vector<LaurentPolynomial> num;
    for (int i = 0; i < ws.points(); ++i) num.push_back(level_symmetric(L, i, s));
    LaurentPolynomial r = fixed_point_sum(num, ws, +1);
    if (s % 2) r = -r;
    h.r_at_1.push_back(r.at_one());
    h.r.push_back(std::move(r));
  }
  for (int i = 0; i < ws.points(); ++i) {
    LaurentPolynomial rebuilt;
    for (int s = 0; s <= N; ++s) rebuilt += h.r[s].shift(s * to_i64(L.a[i]));
    if (rebuilt != phi(ws, L, i))
      throw Error(ErrorKind::ConsistencyFailure, "phi_" + std::to_string(i) + " reconstruction failed");
  }
  return h;
}

// Weights at each point equal {a_i - a_j}.
inline bool cp_check(const WeightSystem& ws, const LevelData& L) {
  if (L.k0 != ws.n() + 1 || !ws.profile.minimal)
    throw Error(ErrorKind::Precondition, "cp_check needs k0 = n+1 on a minimal profile");
  for (int i = 0; i < ws.points(); ++i) {
    std::vector<Int> d;
    for (int j = 0; j < ws.points(); ++j)
      if (j != i) d.push_back(L.a[i] - L.a[j]);
    std::sort(d.begin(), d.end());
    if (d != ws.weights[i]) return false;
  }
  return true;
}

// Dimension 8 closed forms for r_s(1), s = 1..4, in (C1, l, m).
inline std::vector<Rat> exp_r(const Rat& C1, const Rat& l, const Rat& m) {
  Rat f = l * l / 24;
  return {
      Rat(-4) + f * (C1 * m + C1 * C1 + m + 2 * C1 + 1),
      Rat(6) + f * (-3 * C1 * m - C1 * C1 - m + 6 * C1 + 11),
      Rat(-4) + f * (3 * C1 * m - C1 * C1 - m - 6 * C1 + 11),
      Rat(1) + f * (-C1 * m + C1 * C1 + m - 2 * C1 + 1),
  };
}

inline Rat t04(const Rat& C1, const Rat& l, const Rat& m) {
  return l * l * (-C1 * C1 * C1 * C1 + 4 * C1 * C1 * m + 3 * m * m) - 675;
}

struct Dim8Solution {
  Int l;
  Rat m;
};

struct Dim8Result {
  long C1 = 0;
  bool feasible = false;
  std::string reason;
  std::vector<Dim8Solution> solutions;
};

namespace detail {

// Rational roots of a x^2 + b x + c (a != 0) or of b x + c.
inline std::vector<Rat> rational_roots(const Rat& a, const Rat& b, const Rat& c) {
  if (a == 0) {
    if (b == 0) return {};
    Rat x = -c / b;
    return {x};
  }
  Rat disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  Int dn = disc.get_num(), dd = disc.get_den();
  if (!is_perfect_square(dn) || !is_perfect_square(dd)) return {};
  Rat root(isqrt(dn), isqrt(dd));
  std::vector<Rat> out{(-b - root) / (2 * a), (-b + root) / (2 * a)};
  for (auto& x : out) x.canonicalize();
  if (out[0] == out[1]) out.pop_back();
  std::sort(out.begin(), out.end());
  return out;
}

// r_s(1) conditions for the dim 8 minimal case with l0 = 5 - C1.
inline bool corollary_holds(long C1, const Rat& l, const Rat& m) {
  auto r = exp_r(C1, l, m);
  std::vector<Rat> all{Rat(1)};
  all.insert(all.end(), r.begin(), r.end());
  long l0 = 5 - C1;
  Rat total = 0;
  for (long s = 0; s <= 4; ++s) {
    if (s > l0 && all[s] != 0) return false;
    if (s <= l0) {
      if (all[s] != all[l0 - s]) return false;
      total += all[s];
    }
  }
  return total == l * l && t04(C1, l, m) == 0;
}

}  // namespace detail

inline Dim8Result dim8_solver(long C1, long lmax = 60) {
  if (C1 < 1 || C1 > 5) throw Error(ErrorKind::Precondition, "C1 must lie in 1..5");
  Dim8Result res;
  res.C1 = C1;
  if (50 % C1 != 0) {
    res.reason = "C1 does not divide 50";
    return res;
  }
  if (C1 == 1) {
    // 3 l^2 m^2 + 4 l^2 m - l^2 - 675 = 0, scanned over l
    for (long l = 1; l <= lmax; ++l) {
      Rat L(l * l);
      for (const auto& m : detail::rational_roots(3 * L, 4 * L, -L - 675))
        res.solutions.push_back({Int(l), m});
    }
    res.feasible = !res.solutions.empty();
    res.reason = res.feasible ? "rational solutions found" : "no rational solution up to lmax";
    return res;
  }
  // r_4(1) = 0 gives l^2 (C1-1)(m - C1 + 1) = 24; substitute into T04.
  Rat c(C1);
  Rat A = 72, B = 96 * c * c - 675 * (c - 1), Cc = -24 * c * c * c * c + 675 * (c - 1) * (c - 1);
  auto roots = detail::rational_roots(A, B, Cc);
  if (roots.empty()) {
    res.reason = "quadratic in m has no rational root";
    return res;
  }
  for (const auto& m : roots) {
    Rat denom = (c - 1) * (m - c + 1);
    if (denom <= 0) continue;
    Rat L = Rat(24) / denom;
    L.canonicalize();
    if (!is_integer(L) || !is_perfect_square(L.get_num())) continue;
    Rat l(isqrt(L.get_num()));
    if (detail::corollary_holds(C1, l, m)) res.solutions.push_back({l.get_num(), m});
  }
  res.feasible = !res.solutions.empty();
  res.reason = res.feasible ? "solution satisfies every identity" : "no root gives an admissible l";
  return res;
}

}  // namespace hc
