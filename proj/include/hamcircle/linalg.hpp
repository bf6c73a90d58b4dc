#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "core.hpp"

namespace hc {

struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows = static_cast<int>(init.size());
    cols = rows ? static_cast<int>(init.begin()->size()) : 0;
    for (const auto& row : init)
      for (long x : row) a.emplace_back(x);
  }
  static RationalMatrix identity(int k) {
    RationalMatrix m(k, k);
    for (int i = 0; i < k; ++i) m(i, i) = 1;
    return m;
  }

  Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const RationalMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  std::vector<Rat> apply(const std::vector<Int>& v) const {
    std::vector<Rat> out(rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
};

// delta(P, e): +1 at a proper source, -1 at a proper target, 0 otherwise.
inline int delta(int P, const Edge& e) {
  if (e.first == e.second) return 0;
  if (P == e.first) return 1;
  if (P == e.second) return -1;
  return 0;
}

inline RationalMatrix graph_matrix(const std::vector<Edge>& edges) {
  int k = static_cast<int>(edges.size());
  RationalMatrix A(k, k);
  for (int h = 0; h < k; ++h) {
    if (Multigraph::is_cycle(edges[h])) continue;
    for (int m = 0; m < k; ++m)
      A(h, m) = delta(edges[h].first, edges[m]) - delta(edges[h].second, edges[m]);
  }
  return A;
}

inline RationalMatrix graph_matrix(const Multigraph& g, const std::vector<int>& order) {
  std::vector<Edge> e;
  for (int h : order) e.push_back(g.edges.at(h));
  return graph_matrix(e);
}

inline RationalMatrix graph_matrix(const Multigraph& g) { return graph_matrix(g.edges); }

inline RationalMatrix minus_diag(RationalMatrix A, const std::vector<Rat>& m) {
  for (int i = 0; i < A.rows; ++i) A(i, i) -= m[i];
  return A;
}

struct Echelon {
  RationalMatrix R;  // reduced row echelon form
  std::vector<int> pivots;
  std::vector<int> free;
};

inline Echelon rref(RationalMatrix M) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int p = -1;
    for (int i = r; i < M.rows; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M(p, j), M(r, j));
    Rat inv = 1 / M(r, c);
    for (int j = c; j < M.cols; ++j) M(r, j) *= inv;
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || M(i, c) == 0) continue;
      Rat f = M(i, c);
      for (int j = c; j < M.cols; ++j) M(i, j) -= f * M(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(M.cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  for (int c = 0; c < M.cols; ++c)
    if (!is_pivot[c]) e.free.push_back(c);
  e.R = std::move(M);
  return e;
}

inline int rank(const RationalMatrix& M) { return static_cast<int>(rref(M).pivots.size()); }

inline Rat determinant(RationalMatrix M) {
  if (M.rows != M.cols) throw Error(ErrorKind::Precondition, "determinant of a non-square matrix");
  Rat det = 1;
  for (int c = 0; c < M.cols; ++c) {
    int p = -1;
    for (int i = c; i < M.rows; ++i)
      if (M(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < M.cols; ++j) std::swap(M(p, j), M(c, j));
      det = -det;
    }
    det *= M(c, c);
    for (int i = c + 1; i < M.rows; ++i) {
      if (M(i, c) == 0) continue;
      Rat f = M(i, c) / M(c, c);
      for (int j = c; j < M.cols; ++j) M(i, j) -= f * M(c, j);
    }
  }
  return det;
}

struct NullspaceDescription {
  int rank = 0;
  std::vector<std::vector<Int>> basis;
  std::optional<std::vector<Int>> positive_witness;
};

// Basis vector for free column f: x_f = 1, other free columns 0, then scaled to
// coprime integers keeping x_f > 0.
inline std::vector<std::vector<Int>> kernel_basis(const Echelon& e) {
  std::vector<std::vector<Int>> basis;
  int cols = e.R.cols;
  for (int f : e.free) {
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.R(static_cast<int>(r), f);
    basis.push_back(primitive(v));
  }
  return basis;
}

namespace detail {

// Strict homogeneous system rows . c > 0. Returns a rational point or nothing.
inline std::optional<std::vector<Rat>> strict_feasible(std::vector<std::vector<Rat>> rows, int k) {
  auto normalize = [](std::vector<Rat>& r) {
    Rat s = 0;
    for (const auto& x : r)
      if (x != 0) {
        s = abs(x);
        break;
      }
    if (s != 0)
      for (auto& x : r) x /= s;
  };
  auto dedup = [&](std::vector<std::vector<Rat>>& rs) {
    for (auto& r : rs) normalize(r);
    std::sort(rs.begin(), rs.end(), [](const auto& x, const auto& y) {
      for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
      return false;
    });
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  };
  // stages[v] holds the rows that still mention variables 0..v
  std::vector<std::vector<std::vector<Rat>>> stages(k + 1);
  auto has_zero_row = [](const std::vector<std::vector<Rat>>& rs) {
    for (const auto& r : rs)
      if (std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; })) return true;
    return false;
  };
  dedup(rows);
  if (has_zero_row(rows)) return std::nullopt;
  stages[k] = rows;
  for (int v = k - 1; v >= 0; --v) {
    const auto& cur = stages[v + 1];
    std::vector<std::vector<Rat>> next, pos, neg;
    for (const auto& r : cur) {
      if (r[v] > 0) pos.push_back(r);
      else if (r[v] < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        std::vector<Rat> c(k);
        Rat a = p[v], b = -q[v];
        for (int j = 0; j < k; ++j) c[j] = p[j] * b + q[j] * a;
        c[v] = 0;
        next.push_back(std::move(c));
      }
    dedup(next);
    if (has_zero_row(next)) return std::nullopt;  // 0 > 0
    stages[v] = std::move(next);
  }
  // back substitution
  std::vector<Rat> c(k, 0);
  for (int v = 0; v < k; ++v) {
    std::optional<Rat> lo, hi;
    for (const auto& r : stages[v + 1]) {
      if (r[v] == 0) continue;
      Rat rest = 0;
      for (int j = 0; j < v; ++j) rest += r[j] * c[j];
      Rat bound = -rest / r[v];
      if (r[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      if (!(*lo < *hi)) return std::nullopt;
      c[v] = (*lo + *hi) / 2;
    } else if (lo) {
      c[v] = *lo + 1;
    } else if (hi) {
      c[v] = *hi - 1;
    } else {
      c[v] = 1;
    }
  }
  return c;
}

}  // namespace detail

// Visits integer kernel points with every entry in [lo, hi], free coordinates
// varying lexicographically. The callback may return false to stop.
inline void for_each_kernel_point(const Echelon& e, long lo, long hi,
                                  const std::function<bool(const std::vector<Int>&)>& visit) {
  int cols = e.R.cols;
  int k = static_cast<int>(e.free.size());
  std::vector<Int> v(cols, 0);
  std::vector<long> f(k, lo);
  if (k == 0) {
    if (lo <= 0 && 0 <= hi) visit(v);
    return;
  }
  for (;;) {
    for (int t = 0; t < k; ++t) v[e.free[t]] = f[t];
    bool ok = true;
    for (size_t r = 0; r < e.pivots.size() && ok; ++r) {
      Rat x = 0;
      for (int t = 0; t < k; ++t) x -= e.R(static_cast<int>(r), e.free[t]) * f[t];
      if (!is_integer(x) || x < lo || x > hi) ok = false;
      else v[e.pivots[r]] = x.get_num();
    }
    if (ok && !visit(v)) return;
    int t = k - 1;
    while (t >= 0 && f[t] == hi) f[t--] = lo;
    if (t < 0) return;
    ++f[t];
  }
}

inline std::optional<std::vector<Int>> positive_integer_nullvector(const RationalMatrix& M) {
  Echelon e = rref(M);
  auto basis = kernel_basis(e);
  int k = static_cast<int>(basis.size());
  if (k == 0) return std::nullopt;
  std::vector<std::vector<Rat>> rows(M.cols, std::vector<Rat>(k));
  for (int i = 0; i < M.cols; ++i)
    for (int j = 0; j < k; ++j) rows[i][j] = basis[j][i];
  auto c = detail::strict_feasible(rows, k);
  if (!c) return std::nullopt;
  std::vector<Rat> w(M.cols);
  for (int i = 0; i < M.cols; ++i)
    for (int j = 0; j < k; ++j) w[i] += (*c)[j] * basis[j][i];
  std::vector<Int> witness = primitive(w);
  // prefer a lexicographically small witness when one exists in a small box
  Int top = 0;
  for (const auto& x : witness) top = std::max(top, x);
  long cap = top.fits_slong_p() ? top.get_si() : 64;
  for (long B = 1; B <= cap && B <= 64; B *= 2) {
    double work = 1;
    for (int t = 0; t < k; ++t) work *= static_cast<double>(B);
    if (work > 2e5) break;
    std::optional<std::vector<Int>> best;
    for_each_kernel_point(e, 1, B, [&](const std::vector<Int>& v) {
      if (!best || v < *best) best = v;
      return true;
    });
    if (best) {
      Int g = content(*best);
      for (auto& x : *best) x /= g;
      return best;
    }
  }
  return witness;
}

inline NullspaceDescription nullspace(const RationalMatrix& M) {
  Echelon e = rref(M);
  NullspaceDescription d;
  d.rank = static_cast<int>(e.pivots.size());
  d.basis = kernel_basis(e);
  return d;
}

}  // namespace hc
