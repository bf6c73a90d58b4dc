#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "linalg.hpp"
#include "localization.hpp"

namespace hc {

inline Int magnitude_sum(const FixedPointProfile& p) { return c1cn1_expected(p); }

enum class SearchMode { Nonnegative, Bounded };

struct SearchOptions {
  SearchMode mode = SearchMode::Nonnegative;
  long D = 0;                      // bounded mode: |m(e)| <= 2D
  std::optional<long> divisor_C;   // force a single divisor
  bool force_unit_edges = false;   // l(e01) = l(e_{n-1,n}) = 1, or the gcd rule in bounded mode
  bool dim8_strict = false;        // n = 4: C1 in {1, 5}
  bool positive_parts = false;     // forbid zero labels on non-cycles for non-minimal profiles
  long witness_bound = 12;         // entries of sampled null-space points
};

// Edges whose label is pinned (minimal case) or whose gcd is constrained (bounded case).
inline std::vector<int> designated_edges(const Multigraph& g, const SearchOptions& o) {
  std::vector<int> out;
  const auto& p = g.profile;
  for (int h = 0; h < g.size(); ++h) {
    auto [i, j] = g.edges[h];
    if (i == j) continue;
    if (o.mode == SearchMode::Nonnegative && p.minimal) {
      if ((i == 0 && j == 1) || (i == p.n - 1 && j == p.n)) out.push_back(h);
    } else if (p.lambdas[i] == 0 && p.lambdas[j] == 1) {
      out.push_back(h);
    }
  }
  return out;
}

inline void check_search_preconditions(const FixedPointProfile& p, const SearchOptions& o) {
  if (o.mode == SearchMode::Bounded && o.D < 1)
    throw Error(ErrorKind::Precondition, "bounded mode needs D >= 1");
  if (o.mode == SearchMode::Nonnegative && !p.minimal && magnitude_sum(p) < 0)
    throw Error(ErrorKind::Precondition,
                "nonnegative mode refused: non-minimal profile with negative magnitude sum");
  if (o.divisor_C) {
    if (*o.divisor_C < 1) throw Error(ErrorKind::Precondition, "divisor C must be positive");
    Int T = magnitude_sum(p);
    if (T % *o.divisor_C != 0) throw Error(ErrorKind::Precondition, "divisor C does not divide the magnitude sum");
  }
}

// Divisors to sweep, largest first.
inline std::vector<long> divisor_candidates(const Multigraph& g, const SearchOptions& o) {
  const auto& p = g.profile;
  Int T = magnitude_sum(p);
  if (o.divisor_C) return {*o.divisor_C};
  if (!o.force_unit_edges || designated_edges(g, o).empty()) return {1};
  long top = o.mode == SearchMode::Nonnegative ? p.n + 1 : o.D;
  std::vector<long> out;
  Int absT = abs(T);
  for (long C = top; C >= 1; --C) {
    if (absT != 0 && absT % C != 0) continue;
    if (o.dim8_strict && p.n == 4 && C != 1 && C != 5) continue;
    out.push_back(C);
  }
  return out;
}

// Per non-cycle edge bounds on l = m / C.
struct LabelBounds {
  std::vector<int> free;  // non-cycle edge indices
  std::vector<long> lo, hi;
  long target = 0;  // sum of l over free edges
  bool feasible = true;
};

inline long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline LabelBounds label_bounds(const Multigraph& g, const SearchOptions& o, long C) {
  LabelBounds b;
  const auto& p = g.profile;
  Int T = magnitude_sum(p);
  if (T % C != 0) {
    b.feasible = false;
    return b;
  }
  b.target = to_i64(T / C);
  auto des = designated_edges(g, o);
  bool pin = o.force_unit_edges && o.mode == SearchMode::Nonnegative && p.minimal;
  for (int h = 0; h < g.size(); ++h) {
    if (Multigraph::is_cycle(g.edges[h])) continue;
    b.free.push_back(h);
    long lo, hi;
    if (o.mode == SearchMode::Nonnegative) {
      lo = (p.minimal || o.positive_parts) ? 1 : 0;
      hi = std::max(b.target, lo);
      if (pin && std::find(des.begin(), des.end(), h) != des.end()) lo = hi = 1;
    } else {
      hi = (2 * o.D) / C;
      lo = o.positive_parts ? 1 : -hi;
    }
    b.lo.push_back(lo);
    b.hi.push_back(hi);
  }
  return b;
}

inline bool designated_gcd_ok(const Multigraph& g, const SearchOptions& o, const std::vector<long>& m, long C) {
  if (!o.force_unit_edges || o.mode != SearchMode::Bounded || C == 1) return true;
  auto des = designated_edges(g, o);
  if (des.empty()) return true;
  long gg = 0;
  for (int h : des) gg = std::gcd(gg, std::labs(m[h] / C));
  return gg == 1;
}

// Raw stream: every labeling allowed by the sum, bound and divisor rules, in
// colex order over the non-cycle edges, for each divisor C in turn.
inline void enumerate_magnitude_labelings(const Multigraph& g, const SearchOptions& o,
                                          const std::function<void(const MagnitudeLabeling&, long)>& emit) {
  check_search_preconditions(g.profile, o);
  for (long C : divisor_candidates(g, o)) {
    LabelBounds b = label_bounds(g, o, C);
    if (!b.feasible) continue;
    int k = static_cast<int>(b.free.size());
    std::vector<long> l(k), m(g.size(), 0);
    // suffix bounds: min/max reachable sum of positions [0, t)
    std::vector<long> minpre(k + 1, 0), maxpre(k + 1, 0);
    for (int t = 0; t < k; ++t) {
      minpre[t + 1] = minpre[t] + b.lo[t];
      maxpre[t + 1] = maxpre[t] + b.hi[t];
    }
    // assign from the last position down so the output is colex ordered
    std::function<void(int, long)> rec = [&](int t, long left) {
      if (t < 0) {
        if (left != 0) return;
        for (int q = 0; q < k; ++q) m[b.free[q]] = l[q] * C;
        if (!designated_gcd_ok(g, o, m, C)) return;
        MagnitudeLabeling ml{g, {}};
        for (long x : m) ml.m.emplace_back(x);
        emit(ml, C);
        return;
      }
      for (long v = b.lo[t]; v <= b.hi[t]; ++v) {
        long rest = left - v;
        if (rest < minpre[t] || rest > maxpre[t]) continue;
        l[t] = v;
        rec(t - 1, rest);
      }
    };
    if (k == 0) {
      if (b.target == 0) {
        MagnitudeLabeling ml{g, std::vector<Rat>(g.size(), Rat(0))};
        emit(ml, C);
      }
      continue;
    }
    rec(k - 1, b.target);
  }
}

struct WeightFamily {
  Multigraph graph;
  std::vector<Int> m;
  NullspaceDescription nullspace;
  std::vector<WeightSystem> witness_instances;
};

inline RationalMatrix family_matrix(const Multigraph& g, const std::vector<Int>& m) {
  std::vector<Rat> mr(m.begin(), m.end());
  return minus_diag(graph_matrix(g), mr);
}

inline RationalMatrix submatrix(const RationalMatrix& M, const std::vector<int>& idx) {
  int k = static_cast<int>(idx.size());
  RationalMatrix S(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) S(a, b) = M(idx[a], idx[b]);
  return S;
}

inline WeightedMultigraph weighted(const Multigraph& g, const std::vector<Int>& w) {
  return WeightedMultigraph{g, w};
}

inline std::optional<WeightFamily> solve_weights(const Multigraph& g, const std::vector<Int>& m) {
  if (static_cast<int>(m.size()) != g.size())
    throw Error(ErrorKind::Precondition, "one magnitude per edge expected");
  RationalMatrix M = family_matrix(g, m);
  auto dec = components_and_cycles(g);
  std::vector<Int> witness(g.size(), 1);
  for (const auto& comp : dec.components) {
    RationalMatrix S = submatrix(M, comp.edges);
    if (determinant(S) != 0) return std::nullopt;
    auto w = positive_integer_nullvector(S);
    if (!w) return std::nullopt;
    for (size_t a = 0; a < comp.edges.size(); ++a) witness[comp.edges[a]] = (*w)[a];
  }
  for (int h : dec.cycles)
    if (m[h] != 0) return std::nullopt;
  WeightFamily f;
  f.graph = g;
  f.m = m;
  f.nullspace = nullspace(M);
  f.nullspace.positive_witness = witness;
  f.witness_instances.push_back(read_weights(weighted(g, witness)));
  return f;
}

inline std::optional<WeightFamily> solve_weights(const MagnitudeLabeling& ml) {
  std::vector<Int> m;
  for (const auto& x : ml.m) {
    if (!is_integer(x)) return std::nullopt;
    m.push_back(x.get_num());
  }
  return solve_weights(ml.graph, m);
}

// Integer form of the echelon data: pivot x_p = -(sum_f num[p][f] x_f) / den[p].
struct KernelLattice {
  std::vector<int> pivots, free;
  std::vector<std::vector<long>> num;
  std::vector<long> den;
  int cols = 0;
};

inline KernelLattice kernel_lattice(const RationalMatrix& M) {
  Echelon e = rref(M);
  KernelLattice k;
  k.pivots = e.pivots;
  k.free = e.free;
  k.cols = M.cols;
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    Int d = 1;
    for (int f : e.free) d = lcm(d, e.R(static_cast<int>(r), f).get_den());
    std::vector<long> row;
    for (int f : e.free) row.push_back(to_i64(Rat(e.R(static_cast<int>(r), f) * d).get_num()));
    k.num.push_back(std::move(row));
    k.den.push_back(to_i64(d));
  }
  return k;
}

// Visits primitive kernel points with all entries in [1, B].
inline void for_each_positive_point(const KernelLattice& k, long B,
                                    const std::function<bool(const std::vector<long>&)>& visit) {
  int nf = static_cast<int>(k.free.size());
  if (nf == 0) return;
  std::vector<long> f(nf, 1), v(k.cols, 0);
  for (;;) {
    bool ok = true;
    for (int t = 0; t < nf; ++t) v[k.free[t]] = f[t];
    for (size_t r = 0; r < k.pivots.size() && ok; ++r) {
      long s = 0;
      for (int t = 0; t < nf; ++t) s -= k.num[r][t] * f[t];
      if (s % k.den[r] != 0) ok = false;
      else {
        long x = s / k.den[r];
        if (x < 1 || x > B) ok = false;
        else v[k.pivots[r]] = x;
      }
    }
    if (ok) {
      long g = 0;
      for (long x : v) g = std::gcd(g, x);
      if (g == 1 && !visit(v)) return;
    }
    int t = nf - 1;
    while (t >= 0 && f[t] == B) f[t--] = 1;
    if (t < 0) return;
    ++f[t];
  }
}

inline std::vector<WeightSystem> family_instances(const WeightFamily& f, long B) {
  std::vector<WeightSystem> out;
  auto k = kernel_lattice(family_matrix(f.graph, f.m));
  for_each_positive_point(k, B, [&](const std::vector<long>& v) {
    std::vector<Int> w(v.begin(), v.end());
    out.push_back(read_weights(weighted(f.graph, w)));
    return true;
  });
  return out;
}

struct FilterReport {
  std::vector<NamedCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const NamedCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

// Parallel non-cycle edges grouped by (source, target).
inline std::vector<std::vector<int>> parallel_groups(const Multigraph& g) {
  std::vector<std::vector<int>> out;
  for (int h = 0; h < g.size();) {
    int t = h;
    while (t < g.size() && g.edges[t] == g.edges[h]) ++t;
    if (t - h >= 2 && !Multigraph::is_cycle(g.edges[h])) {
      std::vector<int> grp;
      for (int q = h; q < t; ++q) grp.push_back(q);
      out.push_back(std::move(grp));
    }
    h = t;
  }
  return out;
}

// Value of (s_1 - s_0)/w where w is the negative weight at P_1, and of
// (s_{n-1} - s_n)/w' where w' is the positive weight at P_{n-1}.
inline std::pair<Rat, Rat> c1_expressions(const WeightSystem& ws) {
  int n = ws.n();
  Int w11 = 0, wn = 0;
  for (const auto& x : ws.weights[1])
    if (x < 0) w11 = x;
  for (const auto& x : ws.weights[n - 1])
    if (x > 0) wn = x;
  Rat a(ws.sum(1) - ws.sum(0), w11), b(ws.sum(n - 1) - ws.sum(n), wn);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

inline FilterReport lemma_filters(const WeightedMultigraph& wg, const WeightSystem& ws,
                                  const SearchOptions& o) {
  FilterReport r;
  const auto& g = wg.graph;
  int n = g.profile.n;
  auto incident = [&](int P) {
    std::vector<int> out;
    for (int h = 0; h < g.size(); ++h)
      if (g.edges[h].first == P || g.edges[h].second == P) out.push_back(h);
    return out;
  };
  // (a) gcd rules for multiple edges
  bool a_ok = true;
  std::string a_val;
  for (const auto& S : parallel_groups(g)) {
    Int gg = 0;
    for (int h : S) gg = gcd(gg, wg.w[h]);
    int ell = static_cast<int>(S.size());
    bool need = n > 2 && ell >= n - 1;
    if (n > 3 && ell == n - 2) {
      for (int F : {g.edges[S[0]].first, g.edges[S[0]].second}) {
        bool only_cycles = true;
        for (int h : incident(F))
          if (std::find(S.begin(), S.end(), h) == S.end() && !Multigraph::is_cycle(g.edges[h]))
            only_cycles = false;
        need = need || only_cycles;
      }
    }
    if (need && gg != 1) {
      a_ok = false;
      a_val = "gcd " + gg.get_str();
    }
  }
  r.checks.push_back({"multiple_edge_gcd", a_ok, a_val});
  // (b) divisor propagation over subsets of multiple edges
  bool b_ok = true;
  for (const auto& S : parallel_groups(g)) {
    int ell = static_cast<int>(S.size());
    if (n <= 2) break;
    int P = g.edges[S[0]].first, Q = g.edges[S[0]].second;
    for (unsigned mask = 1; mask < (1u << ell) && b_ok; ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> sub;
      Int gg = 0;
      for (int q = 0; q < ell; ++q)
        if (mask >> q & 1) {
          sub.push_back(S[q]);
          gg = gcd(gg, wg.w[S[q]]);
        }
      if (gg <= 1) continue;
      auto has_multiple = [&](int F) {
        for (int h : incident(F))
          if (std::find(sub.begin(), sub.end(), h) == sub.end() && wg.w[h] % gg == 0) return true;
        return false;
      };
      if (!has_multiple(P) || !has_multiple(Q)) b_ok = false;
    }
  }
  r.checks.push_back({"divisor_propagation", b_ok, ""});
  // (c), (d) the two C1 expressions
  if (g.profile.minimal && n >= 2) {
    auto [x, y] = c1_expressions(ws);
    Int T = magnitude_sum(g.profile);
    bool ok = x == y && is_integer(x) && x > 0 && T % x.get_num() == 0 && x <= n + 1;
    r.checks.push_back({"c1_equal_divisor", ok, x.get_str() + "," + y.get_str()});
    if (o.dim8_strict && n == 4) r.checks.push_back({"dim8_c1", x == 1 || x == 5, x.get_str()});
  }
  // (e) weights at the ends of an edge of weight l agree modulo l
  bool e_ok = true;
  for (int h = 0; h < g.size() && e_ok; ++h) {
    auto [i, j] = g.edges[h];
    const Int& l = wg.w[h];
    if (i == j || l == 1) continue;
    auto residues = [&](int P) {
      std::vector<Int> v;
      for (const auto& x : ws.weights[P]) {
        Int t = x % l;
        if (t < 0) t += l;
        v.push_back(t);
      }
      std::sort(v.begin(), v.end());
      return v;
    };
    e_ok = residues(i) == residues(j);
  }
  r.checks.push_back({"modulo_agreement", e_ok, ""});
  return r;
}

}  // namespace hc
