#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "magnitudes.hpp"

namespace hc {

using i128 = __int128;

// det(B - diag(x)) = sum_S coef[S] prod_{t in S} x_t, where bit t of S refers
// to the t-th edge of the component and coef[S] = (-1)^|S| det(B[~S, ~S]).
inline std::vector<std::int64_t> multiaffine_coefficients(const RationalMatrix& B) {
  int k = B.rows;
  std::vector<std::int64_t> coef(std::size_t(1) << k);
  for (std::size_t S = 0; S < coef.size(); ++S) {
    std::vector<int> keep;
    for (int t = 0; t < k; ++t)
      if (!(S >> t & 1)) keep.push_back(t);
    RationalMatrix sub(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a)
      for (size_t b = 0; b < keep.size(); ++b) sub(a, b) = B(keep[a], keep[b]);
    Rat d = keep.empty() ? Rat(1) : determinant(sub);
    Int v = d.get_num();
    if (__builtin_popcountll(S) % 2) v = -v;
    coef[S] = to_i64(v);
  }
  return coef;
}

// Fraction-free elimination; a is k x k row-major.
inline i128 bareiss_det(std::vector<i128> a, int k) {
  if (k == 0) return 1;
  i128 prev = 1;
  int sign = 1;
  for (int c = 0; c < k - 1; ++c) {
    if (a[c * k + c] == 0) {
      int r = c + 1;
      while (r < k && a[r * k + c] == 0) ++r;
      if (r == k) return 0;
      for (int j = 0; j < k; ++j) std::swap(a[c * k + j], a[r * k + j]);
      sign = -sign;
    }
    for (int i = c + 1; i < k; ++i) {
      for (int j = c + 1; j < k; ++j) a[i * k + j] = (a[i * k + j] * a[c * k + c] - a[i * k + c] * a[c * k + j]) / prev;
      a[i * k + c] = 0;
    }
    prev = a[c * k + c];
  }
  return sign * a[k * k - 1];
}

// For a singular k x k matrix M of rank k-1 the rows of the adjugate span the
// kernel; the kernel meets the open positive orthant iff such a row is strictly
// one-signed. Returns false only when that is decided negatively.
inline bool positive_kernel_possible(const std::vector<i128>& M, int k) {
  if (k == 1) return true;
  std::vector<i128> minor((k - 1) * (k - 1));
  for (int r = 0; r < k; ++r) {
    std::vector<i128> v(k);
    bool nonzero = false;
    for (int j = 0; j < k; ++j) {
      int q = 0;
      for (int a = 0; a < k; ++a) {
        if (a == r) continue;
        for (int b = 0; b < k; ++b)
          if (b != j) minor[q++] = M[a * k + b];
      }
      v[j] = bareiss_det(minor, k - 1);
      if ((r + j) % 2) v[j] = -v[j];
      nonzero = nonzero || v[j] != 0;
    }
    if (!nonzero) continue;
    bool pos = true, neg = true;
    for (auto x : v) {
      pos = pos && x > 0;
      neg = neg && x < 0;
    }
    return pos || neg;
  }
  return true;  // rank below k-1: left to the exact solver
}

struct SearchPlan {
  Multigraph graph;
  long C = 1;
  LabelBounds bounds;            // positions follow `order`
  std::vector<int> order;        // non-cycle edges, component by component
  std::vector<int> comp_of;      // component index per position
  std::vector<int> comp_start;   // first position of each component
  std::vector<int> comp_size;
  std::vector<std::vector<std::int64_t>> coef;  // per component
  std::vector<std::vector<std::int64_t>> B;     // per component, row-major graph matrix
  int split = 0;                                // first position whose label is not pinned
  bool cofactor_pruning = true;                 // off when 128-bit minors could overflow
  std::vector<long> minsuf, maxsuf;             // reachable sums of positions [t, end)
  bool feasible = true;
};

// Static row-sign rule: a row whose off-diagonal entries are all >= 0 (some > 0)
// needs m > 2; all <= 0 (some < 0) needs m < 2; all zero needs m = 2.
inline void apply_row_signs(const RationalMatrix& B, long C, long& lo, long& hi, int row) {
  bool pos = false, neg = false;
  for (int j = 0; j < B.cols; ++j) {
    if (j == row) continue;
    if (B(row, j) > 0) pos = true;
    if (B(row, j) < 0) neg = true;
  }
  if (pos && !neg) lo = std::max(lo, floor_div(3 + C - 1, C));
  else if (neg && !pos) hi = std::min(hi, floor_div(1, C));
  else if (!pos && !neg) {
    if (2 % C) {
      lo = 1;
      hi = 0;
    } else {
      lo = std::max(lo, 2 / C);
      hi = std::min(hi, 2 / C);
    }
  }
}

inline SearchPlan make_plan(const Multigraph& g, const SearchOptions& o, long C) {
  SearchPlan p;
  p.graph = g;
  p.C = C;
  LabelBounds raw = label_bounds(g, o, C);
  if (!raw.feasible) {
    p.feasible = false;
    return p;
  }
  auto dec = components_and_cycles(g);
  RationalMatrix A = graph_matrix(g);
  p.bounds.target = raw.target;
  for (size_t c = 0; c < dec.components.size(); ++c) {
    const auto& comp = dec.components[c];
    p.comp_start.push_back(static_cast<int>(p.order.size()));
    p.comp_size.push_back(static_cast<int>(comp.edges.size()));
    RationalMatrix B = submatrix(A, comp.edges);
    if (comp.edges.size() > 16) throw Error(ErrorKind::Precondition, "component too large for the search");
    p.coef.push_back(multiaffine_coefficients(B));
    p.B.emplace_back();
    for (int a = 0; a < B.rows; ++a)
      for (int b = 0; b < B.cols; ++b) p.B.back().push_back(to_i64(B(a, b).get_num()));
    for (size_t t = 0; t < comp.edges.size(); ++t) {
      int h = comp.edges[t];
      auto it = std::find(raw.free.begin(), raw.free.end(), h);
      size_t q = it - raw.free.begin();
      long lo = raw.lo[q], hi = raw.hi[q];
      apply_row_signs(B, C, lo, hi, static_cast<int>(t));
      p.order.push_back(h);
      p.comp_of.push_back(static_cast<int>(c));
      p.bounds.free.push_back(h);
      p.bounds.lo.push_back(lo);
      p.bounds.hi.push_back(hi);
      if (lo > hi) p.feasible = false;
    }
  }
  int k = static_cast<int>(p.order.size());
  while (p.split + 1 < k && p.bounds.lo[p.split] == p.bounds.hi[p.split]) ++p.split;
  p.minsuf.assign(k + 1, 0);
  p.maxsuf.assign(k + 1, 0);
  for (int t = k - 1; t >= 0; --t) {
    p.minsuf[t] = p.minsuf[t + 1] + p.bounds.lo[t];
    p.maxsuf[t] = p.maxsuf[t + 1] + p.bounds.hi[t];
  }
  // overflow guard for the 128-bit evaluation
  long xmax = 1;
  for (int t = 0; t < k; ++t) xmax = std::max({xmax, std::labs(p.bounds.lo[t]) * C, std::labs(p.bounds.hi[t]) * C});
  for (const auto& cf : p.coef) {
    long double total = 0;
    for (std::size_t S = 0; S < cf.size(); ++S)
      total += std::fabs(static_cast<long double>(cf[S])) *
               std::pow(static_cast<long double>(xmax), __builtin_popcountll(S));
    if (total > 1e37L) throw Error(ErrorKind::Precondition, "search values exceed 128-bit range");
  }
  for (int kc : p.comp_size) {
    // Hadamard bound on minors, squared for the Bareiss cross products
    long double row = std::sqrt(static_cast<long double>(xmax + 2) * (xmax + 2) + 4.0L * kc);
    if (2 * kc * std::log10(row) > 36) p.cofactor_pruning = false;
  }
  return p;
}

// Labelings (as full m vectors in graph edge order) with every component
// determinant zero and, where decidable by cofactors, a positive kernel vector.
// If `first` is set, the label at position `split` is fixed to that value.
inline void run_plan(const SearchPlan& p, std::optional<long> first, const SearchOptions& o,
                     const std::function<void(const std::vector<long>&)>& emit) {
  if (!p.feasible) return;
  int k = static_cast<int>(p.order.size());
  const long C = p.C;
  std::vector<long> l(k, 0), m(p.graph.size(), 0);
  // poly[t] holds the partially evaluated polynomial of the current component
  // before position t is assigned.
  std::vector<std::vector<i128>> poly(k + 1);
  auto start_component = [&](int t) {
    int c = p.comp_of[t];
    const auto& cf = p.coef[c];
    poly[t].assign(cf.begin(), cf.end());
  };
  auto finish = [&]() {
    for (int q = 0; q < k; ++q) m[p.order[q]] = l[q] * C;
    if (designated_gcd_ok(p.graph, o, m, C)) emit(m);
  };
  auto positive_ok = [&](int c) {
    if (!p.cofactor_pruning) return true;
    int s0 = p.comp_start[c], kc = p.comp_size[c];
    std::vector<i128> M(p.B[c].begin(), p.B[c].end());
    for (int a = 0; a < kc; ++a) M[a * kc + a] -= static_cast<i128>(l[s0 + a]) * C;
    return positive_kernel_possible(M, kc);
  };
  std::function<void(int, long)> rec = [&](int t, long left) {
    if (t == k) {
      if (left == 0) finish();
      return;
    }
    int c = p.comp_of[t];
    if (t == p.comp_start[c]) start_component(t);
    const auto& P = poly[t];
    bool last_in_comp = t == p.comp_start[c] + p.comp_size[c] - 1;
    long lo = std::max(p.bounds.lo[t], left - p.maxsuf[t + 1]);
    long hi = std::min(p.bounds.hi[t], left - p.minsuf[t + 1]);
    if (first && t == p.split) {
      lo = std::max(lo, *first);
      hi = std::min(hi, *first);
    }
    if (lo > hi) return;
    if (last_in_comp) {
      // P = p0 + p1 x must vanish
      i128 p0 = P[0], p1 = P[1];
      auto close = [&](long v) {
        l[t] = v;
        if (positive_ok(c)) rec(t + 1, left - v);
      };
      if (t == k - 1) {
        if (left < lo || left > hi) return;
        if (p0 + p1 * (static_cast<i128>(left) * C) == 0) close(left);
        return;
      }
      if (p1 == 0) {
        if (p0 != 0) return;
        for (long v = lo; v <= hi; ++v) close(v);
        return;
      }
      if ((-p0) % p1 != 0) return;
      i128 x = -p0 / p1;
      if (x % C != 0) return;
      i128 v = x / C;
      if (v < lo || v > hi) return;
      close(static_cast<long>(v));
      return;
    }
    std::size_t half = P.size() / 2;
    auto& Q = poly[t + 1];
    Q.resize(half);
    for (long v = lo; v <= hi; ++v) {
      i128 x = static_cast<i128>(v) * C;
      for (std::size_t s = 0; s < half; ++s) Q[s] = P[2 * s] + x * P[2 * s + 1];
      l[t] = v;
      rec(t + 1, left - v);
    }
  };
  if (k == 0) {
    if (p.bounds.target == 0) finish();
    return;
  }
  rec(0, p.bounds.target);
}

// Values the label at position `split` can take; one search block per value.
inline std::vector<long> first_values(const SearchPlan& p) {
  std::vector<long> out;
  if (!p.feasible || p.order.empty()) return out;
  long left = p.bounds.target;
  for (int t = 0; t < p.split; ++t) left -= p.bounds.lo[t];
  long lo = std::max(p.bounds.lo[p.split], left - p.maxsuf[p.split + 1]);
  long hi = std::min(p.bounds.hi[p.split], left - p.minsuf[p.split + 1]);
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace hc
