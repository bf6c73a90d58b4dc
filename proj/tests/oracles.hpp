// Independent brute-force reference implementations shared by the unit tests
// and the acceptance binary.
#pragma once

#include <cstdlib>
#include <set>
#include <vector>

#include "hamcircle/hamcircle.hpp"

namespace oracle {

using hc::Edge;
using hc::Int;
using hc::Rat;
using EdgeList = std::vector<Edge>;

// Every multiset of ordered pairs of the right size whose in/out degrees match
// the profile: out-degree n - lambda, in-degree lambda, a loop counting once each way.
inline std::set<EdgeList> graphs(const hc::FixedPointProfile& p, bool nonneg) {
  int V = p.points(), E = V * p.n / 2;
  EdgeList pairs;
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j)
      if (!nonneg || p.lambdas[i] <= p.lambdas[j]) pairs.emplace_back(i, j);
  std::set<EdgeList> out;
  std::vector<int> idx(E, 0);
  for (;;) {
    std::vector<int> o(V, 0), in(V, 0);
    EdgeList e;
    for (int k : idx) {
      e.push_back(pairs[k]);
      ++o[pairs[k].first];
      ++in[pairs[k].second];
    }
    bool ok = true;
    for (int v = 0; v < V; ++v) ok = ok && o[v] == p.n - p.lambdas[v] && in[v] == p.lambdas[v];
    if (ok) out.insert(e);
    int t = E - 1;
    while (t >= 0 && idx[t] == static_cast<int>(pairs.size()) - 1) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < E; ++s) idx[s] = idx[t];
  }
  return out;
}

// Minimal profiles reverse by P_i -> P_{N-i} and flipping every edge.
inline EdgeList mirror(const EdgeList& e, int N) {
  EdgeList r;
  for (auto [i, j] : e) r.emplace_back(N - j, N - i);
  std::sort(r.begin(), r.end());
  return r;
}

inline std::set<EdgeList> classes(const std::set<EdgeList>& raw, int N) {
  std::set<EdgeList> c;
  for (const auto& e : raw) c.insert(std::min(e, mirror(e, N)));
  return c;
}

inline std::set<EdgeList> edge_sets(const std::vector<hc::Multigraph>& gs) {
  std::set<EdgeList> s;
  for (const auto& g : gs) s.insert(g.edges);
  return s;
}

// Exhaustive search for a kernel vector with entries in [1, bound].
inline bool positive_kernel_vector(const hc::RationalMatrix& M, long bound = 20) {
  int k = M.cols;
  std::vector<std::vector<long>> A(M.rows, std::vector<long>(k));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < k; ++j) A[i][j] = M(i, j).get_num().get_si();
  std::vector<long> v(k, 1);
  for (;;) {
    bool zero = true;
    for (int i = 0; i < M.rows && zero; ++i) {
      long s = 0;
      for (int j = 0; j < k; ++j) s += A[i][j] * v[j];
      zero = s == 0;
    }
    if (zero) return true;
    int t = k - 1;
    while (t >= 0 && v[t] == bound) v[t--] = 1;
    if (t < 0) return false;
    ++v[t];
  }
}

inline bool in_kernel(const hc::RationalMatrix& M, const std::vector<Int>& v) {
  for (const auto& x : M.apply(v))
    if (x != 0) return false;
  return true;
}

// Agreement of positive_integer_nullvector with exhaustive search; a witness
// beyond the box only has to be a genuine positive kernel vector.
inline bool nullvector_agrees(const hc::RationalMatrix& M) {
  bool box = positive_kernel_vector(M);
  auto w = hc::positive_integer_nullvector(M);
  if (!w) return !box;
  if (!in_kernel(M, *w)) return false;
  Int top = 0;
  for (const auto& x : *w) {
    if (x <= 0) return false;
    top = std::max(top, x);
  }
  return top > 20 || box;
}

// Graph matrices of small graphs minus small diagonals (singular ones and a
// share of the rest), plus random integer matrices.
inline std::vector<hc::RationalMatrix> nullvector_cases() {
  std::vector<hc::RationalMatrix> cases;
  std::vector<EdgeList> gs{{{0, 1}, {0, 2}, {1, 2}}, {{0, 2}, {0, 2}, {1, 1}},
                           {{0, 2}, {0, 1}, {1, 3}, {2, 3}}, {{0, 3}, {0, 3}, {1, 2}, {1, 2}},
                           {{0, 1}, {0, 3}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  for (const auto& e : gs) {
    auto A = hc::graph_matrix(e);
    int k = A.rows;
    std::vector<long> m(k, 0);
    for (;;) {
      std::vector<Rat> md(m.begin(), m.end());
      auto M = hc::minus_diag(A, md);
      if (hc::determinant(M) == 0 || m[0] % 3 == 0) cases.push_back(M);
      int t = k - 1;
      while (t >= 0 && m[t] == 5) m[t--] = 0;
      if (t < 0) break;
      ++m[t];
    }
  }
  unsigned long state = 11;
  auto next = [&] {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return static_cast<long>((state >> 33) % 5) - 2;
  };
  for (int t = 0; t < 100; ++t) {
    hc::RationalMatrix M(2, 3 + t % 2);
    for (auto& x : M.a) x = next();
    cases.push_back(M);
  }
  return cases;
}

// sum over points of prod_k e_{j_k}(w) / prod w, expanding prod (1 + w x).
inline Rat integral(const std::vector<std::vector<Int>>& weights, const std::vector<int>& md) {
  Rat total = 0;
  for (const auto& w : weights) {
    int n = static_cast<int>(w.size());
    std::vector<Int> e(n + 1, 0);
    e[0] = 1;
    for (const auto& x : w)
      for (int j = n; j >= 1; --j) e[j] += e[j - 1] * x;
    Int num = 1;
    for (int j : md) num *= e[j];
    total += hc::frac(num, e[n]);
  }
  return total;
}

inline Rat power(const Rat& t, long e) {
  Rat r = 1, b = e >= 0 ? t : Rat(1 / t);
  for (long k = 0; k < std::labs(e); ++k) r *= b;
  return r;
}

inline Rat evaluate(const hc::LaurentPolynomial& p, const Rat& t) {
  Rat s = 0;
  for (size_t k = 0; k < p.c.size(); ++k) s += p.c[k] * power(t, p.low + static_cast<long>(k));
  return s;
}

// sum_i v_i(t) / prod_w (1 - t^{-w}) evaluated directly at a rational t.
inline Rat index_at(const std::vector<hc::LaurentPolynomial>& values, const hc::WeightSystem& ws, const Rat& t) {
  Rat s = 0;
  for (int i = 0; i < ws.points(); ++i) {
    Rat den = 1;
    for (const auto& w : ws.weights[i]) den *= 1 - power(t, -w.get_si());
    s += evaluate(values[i], t) / den;
  }
  return s;
}

inline const std::vector<Rat>& sample_points() {
  static const std::vector<Rat> pts{Rat(2), Rat(3), Rat(1, 2), Rat(5, 3), Rat(-2)};
  return pts;
}

// Index of t^{k xi_i} over CP^n with random xi; returns the number of
// instances where as_index disagrees with direct evaluation.
inline int as_index_disagreements(int instances, unsigned seed) {
  unsigned long state = seed;
  auto next = [&](unsigned long mod) {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return static_cast<long>((state >> 33) % mod);
  };
  int bad = 0, done = 0;
  for (int trial = 0; done < instances; ++trial) {
    int n = 1 + trial % 4;
    std::vector<long> xi(n + 1);
    long top = 0;
    for (int i = n; i >= 0; --i) {
      xi[i] = top;
      top += 1 + next(3);
    }
    hc::WeightSystem ws;
    try {
      ws = hc::cp_fixture(xi);
    } catch (const hc::Error&) {
      continue;  // common factor
    }
    long k = next(7) - 3;
    std::vector<hc::LaurentPolynomial> v;
    for (long x : xi) v.push_back(hc::LaurentPolynomial::monomial(1, k * x));
    ++done;
    try {
      auto r = hc::as_index(v, ws);
      for (const auto& t : sample_points())
        if (evaluate(r, t) != index_at(v, ws, t)) {
          ++bad;
          break;
        }
    } catch (const hc::Error&) {
      ++bad;
    }
  }
  return bad;
}

inline std::vector<hc::WeightSystem> fixtures() {
  return {hc::cp_fixture({2, 1, 0}),       hc::cp_fixture({3, 1, 0}),       hc::cp_fixture({5, 3, 1, 0}),
          hc::cp_fixture({4, 3, 2, 1, 0}), hc::cp_fixture({9, 4, 2, 1, 0}), hc::grassmannian_fixture({2, 1}),
          hc::grassmannian_fixture({3, 1}), hc::grassmannian_fixture({5, 2}), hc::v5_fixture(),
          hc::v22_fixture(),               hc::s2xs2_fixture(1, 1),         hc::s2xs2_fixture(2, 3),
          hc::s2xs2_fixture(5, 3)};
}

}  // namespace oracle
