#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphs.hpp"

namespace hc {

// sigma[j] = j-th elementary symmetric polynomial, j = 0..size
inline std::vector<Int> elementary_symmetric(const std::vector<Int>& w) {
  std::vector<Int> e(w.size() + 1, 0);
  e[0] = 1;
  for (size_t k = 0; k < w.size(); ++k)
    for (size_t j = k + 1; j >= 1; --j) e[j] += e[j - 1] * w[k];
  return e;
}

// Nondecreasing sequences of positive integers with total below n; includes ().
inline std::vector<std::vector<int>> multidegrees_below(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    out.push_back(cur);
    for (int j = start; j <= left; ++j) {
      cur.push_back(j);
      rec(j, left - j);
      cur.pop_back();
    }
  };
  rec(1, n - 1);
  return out;
}

// Same sum on bare per-point weight lists; signs are not interpreted.
inline Rat abbv_sum_raw(const std::vector<std::vector<Int>>& weights, const std::vector<int>& multidegree) {
  Rat total = 0;
  for (const auto& w : weights) {
    int n = static_cast<int>(w.size());
    for (int j : multidegree)
      if (j < 0 || j > n) throw Error(ErrorKind::Precondition, "multidegree entry outside [0,n]");
    auto e = elementary_symmetric(w);
    if (e[n] == 0) throw Error(ErrorKind::DegenerateWeights, "zero weight product");
    Int num = 1;
    for (int j : multidegree) num *= e[j];
    total += frac(num, e[n]);
  }
  total.canonicalize();
  return total;
}

inline Rat abbv_sum(const WeightSystem& ws, const std::vector<int>& multidegree) {
  return abbv_sum_raw(ws.weights, multidegree);
}

// Sum over p of N_p [6p(p-1) + (5n - 3n^2)/2].
inline Int c1cn1_expected(const FixedPointProfile& p) {
  Rat s = 0;
  for (int q = 0; q <= p.n; ++q)
    s += Rat(p.Np[q]) * (Rat(6 * q * (q - 1)) + frac(5 * p.n - 3 * p.n * p.n, 2));
  s.canonicalize();
  if (!is_integer(s)) throw Error(ErrorKind::NonIntegralSum, "c1 c_{n-1} formula is not integral");
  return s.get_num();
}

inline Int product_of(const std::vector<Int>& w, int sign) {
  Int p = 1;
  for (const auto& x : w)
    if ((sign < 0 && x < 0) || (sign > 0 && x > 0)) p *= x;
  return p;
}

struct NamedCheck {
  std::string name;
  bool pass = true;
  std::string value;
};

struct ChernReport {
  std::vector<std::pair<std::vector<int>, Rat>> zero_integrals;
  Rat c_n, c1_cn1;
  Int expected_c1_cn1;
  std::vector<long> chi_y;  // coefficient of y^p
  std::vector<Rat> Ci, Cpi;
  std::vector<NamedCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const NamedCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline std::string multidegree_name(const std::vector<int>& md) {
  std::string s = "(";
  for (size_t k = 0; k < md.size(); ++k) s += (k ? "," : "") + std::to_string(md[k]);
  return s + ")";
}

// Minimal case: C_i = prod_{j<i}(s_i - s_j) / Lambda_i^-, and C'_i from the
// reversed action, C'_i = prod_{j>n-i}(s_{n-i} - s_j) / Lambda_{n-i}^+.
inline std::pair<std::vector<Rat>, std::vector<Rat>> basis_constants(const WeightSystem& ws) {
  int n = ws.n();
  std::vector<Int> s(ws.points());
  for (int i = 0; i < ws.points(); ++i) s[i] = ws.sum(i);
  std::vector<Rat> C(n + 1), Cp(n + 1);
  for (int i = 0; i <= n; ++i) {
    Int num = 1;
    for (int j = 0; j < i; ++j) num *= s[i] - s[j];
    C[i] = frac(num, product_of(ws.weights[i], -1));
    Int nump = 1;
    for (int j = n - i + 1; j <= n; ++j) nump *= s[n - i] - s[j];
    Cp[i] = frac(nump, product_of(ws.weights[n - i], +1));
  }
  return {C, Cp};
}

inline ChernReport chern_battery(const WeightSystem& ws) {
  ChernReport r;
  const auto& p = ws.profile;
  int n = ws.n();
  bool zeros = true;
  for (const auto& md : multidegrees_below(n)) {
    Rat v = abbv_sum(ws, md);
    r.zero_integrals.emplace_back(md, v);
    bool ok = v == 0;
    zeros = zeros && ok;
    r.checks.push_back({"zero_integral" + multidegree_name(md), ok, v.get_str()});
  }
  r.c_n = abbv_sum(ws, {n});
  r.c1_cn1 = n >= 2 ? abbv_sum(ws, {1, n - 1}) : abbv_sum(ws, {1});
  r.expected_c1_cn1 = c1cn1_expected(p);
  r.checks.push_back({"c_n", r.c_n == p.points(), r.c_n.get_str()});
  r.checks.push_back({"c1_cn1", r.c1_cn1 == r.expected_c1_cn1, r.c1_cn1.get_str()});
  r.chi_y.assign(n + 1, 0);
  for (int q = 0; q <= n; ++q) r.chi_y[q] = (q % 2 ? -1L : 1L) * p.Np[q];
  if (p.minimal) {
    auto [C, Cp] = basis_constants(ws);
    r.Ci = C;
    r.Cpi = Cp;
    bool positive = true, equal = true;
    for (int i = 0; i <= n; ++i) {
      positive = positive && is_integer(C[i]) && C[i] > 0;
      equal = equal && C[i] == Cp[i];
    }
    r.checks.push_back({"Ci_positive_integers", positive, ""});
    r.checks.push_back({"Ci_equal_Cpi", equal, ""});
    Int T = Int(n) * (n + 1) * (n + 1) / 2;
    bool divides = is_integer(C[1]) && C[1] > 0 && T % C[1].get_num() == 0 && C[1] <= n + 1;
    r.checks.push_back({"C1_divisor", divides, C[1].get_str()});
    bool decreasing = true;
    for (int i = 0; i + 1 < ws.points(); ++i) decreasing = decreasing && ws.sum(i) > ws.sum(i + 1);
    r.checks.push_back({"c1_strictly_decreasing", decreasing, ""});
  }
  return r;
}

// Vertex joined to all n other points by its n edges, or -1.
inline int full_degree_vertex(const Multigraph& g) {
  int V = g.profile.points();
  for (int v = 0; v < V; ++v) {
    std::vector<int> seen(V, 0);
    int count = 0;
    bool ok = true;
    for (const auto& [i, j] : g.edges) {
      if (i != v && j != v) continue;
      if (i == j) {
        ok = false;
        break;
      }
      int o = i == v ? j : i;
      if (seen[o]++) ok = false;
      ++count;
    }
    if (ok && count == g.profile.n && count == V - 1) return v;
  }
  return -1;
}

struct C1nReport {
  Rat product;     // prod of magnitudes at the full-degree vertex
  Rat localized;   // sum_i s_i^n / sigma_n
  Int bound;       // ((n^2+n+2)/2)^n
  int vertex = -1;
};

inline C1nReport complete_graph_c1n(const WeightSystem& ws, const WeightedMultigraph& g) {
  int v = full_degree_vertex(g.graph);
  if (v < 0) throw Error(ErrorKind::ShapePrecondition, "no vertex meets n distinct non-cycle edges");
  auto m = magnitudes_from_weights(g, ws);
  C1nReport r;
  r.vertex = v;
  r.product = 1;
  for (int h = 0; h < g.graph.size(); ++h) {
    auto [i, j] = g.graph.edges[h];
    if (i == v || j == v) r.product *= m.m[h];
  }
  int n = ws.n();
  r.localized = 0;
  for (int i = 0; i < ws.points(); ++i) {
    Int sn;
    mpz_pow_ui(sn.get_mpz_t(), ws.sum(i).get_mpz_t(), n);
    r.localized += frac(sn, elementary_symmetric(ws.weights[i])[n]);
  }
  r.localized.canonicalize();
  mpz_ui_pow_ui(r.bound.get_mpz_t(), (n * n + n + 2) / 2, n);
  return r;
}

}  // namespace hc
