#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace hc {

struct FixedPointProfile {
  int n = 0;
  std::vector<int> lambdas;
  std::vector<int> Np;  // Np[p] = #{i : lambda_i = p}
  bool minimal = false;

  int N() const { return static_cast<int>(lambdas.size()) - 1; }
  int points() const { return static_cast<int>(lambdas.size()); }
  bool symmetric() const {
    for (int p = 0; p <= n; ++p)
      if (Np[p] != Np[n - p]) return false;
    return true;
  }
  bool operator==(const FixedPointProfile& o) const { return n == o.n && lambdas == o.lambdas; }
};

inline FixedPointProfile validate_profile(int n, std::vector<int> lambdas) {
  if (n < 1) throw Error(ErrorKind::RangeViolation, "n must be positive");
  if (lambdas.empty()) throw Error(ErrorKind::RangeViolation, "no fixed points");
  long sum = 0;
  for (int l : lambdas) {
    if (l < 0 || l > n)
      throw Error(ErrorKind::RangeViolation, "lambda " + std::to_string(l) + " outside [0," +
                                                 std::to_string(n) + "]");
    sum += l;
  }
  long pts = static_cast<long>(lambdas.size());
  if (2 * sum != pts * n)
    throw Error(ErrorKind::BalanceViolation,
                "sum of lambdas is " + std::to_string(sum) + ", expected (N+1)n/2");
  FixedPointProfile p;
  p.n = n;
  p.lambdas = std::move(lambdas);
  p.Np.assign(n + 1, 0);
  for (int l : p.lambdas) ++p.Np[l];
  p.minimal = p.points() == n + 1;
  for (int i = 0; p.minimal && i < p.points(); ++i) p.minimal = p.lambdas[i] == i;
  return p;
}

inline FixedPointProfile minimal_profile(int n) {
  std::vector<int> l(n + 1);
  std::iota(l.begin(), l.end(), 0);
  return validate_profile(n, l);
}

// Weights at each point are kept sorted ascending.
struct WeightSystem {
  FixedPointProfile profile;
  std::vector<std::vector<Int>> weights;

  int n() const { return profile.n; }
  int points() const { return profile.points(); }
  Int sum(int i) const {
    Int s = 0;
    for (const auto& w : weights[i]) s += w;
    return s;
  }
  bool operator==(const WeightSystem& o) const {
    return profile == o.profile && weights == o.weights;
  }
  bool operator<(const WeightSystem& o) const {
    if (profile.lambdas != o.profile.lambdas) return profile.lambdas < o.profile.lambdas;
    return weights < o.weights;
  }
};

// lambdas are read off from the sign pattern unless given.
inline WeightSystem make_weight_system(std::vector<std::vector<Int>> w,
                                       std::vector<int> lambdas = {}) {
  if (w.empty()) throw Error(ErrorKind::SchemaError, "no fixed points");
  int n = static_cast<int>(w[0].size());
  for (auto& pt : w) {
    if (static_cast<int>(pt.size()) != n)
      throw Error(ErrorKind::SchemaError, "points carry different numbers of weights");
    for (const auto& x : pt)
      if (x == 0) throw Error(ErrorKind::DegenerateWeights, "zero weight");
    std::sort(pt.begin(), pt.end());
  }
  if (lambdas.empty())
    for (const auto& pt : w)
      lambdas.push_back(static_cast<int>(std::count_if(pt.begin(), pt.end(),
                                                       [](const Int& x) { return x < 0; })));
  if (lambdas.size() != w.size())
    throw Error(ErrorKind::SchemaError, "lambda count does not match point count");
  WeightSystem ws;
  ws.profile = validate_profile(n, std::move(lambdas));
  ws.weights = std::move(w);
  return ws;
}

inline WeightSystem ws_from(const std::vector<std::vector<long>>& w) {
  std::vector<std::vector<Int>> z;
  for (const auto& pt : w) {
    z.emplace_back();
    for (long x : pt) z.back().emplace_back(x);
  }
  return make_weight_system(std::move(z));
}

// Negate all weights and reverse the point order.
inline WeightSystem reversed(const WeightSystem& ws) {
  std::vector<std::vector<Int>> w;
  for (int i = ws.points() - 1; i >= 0; --i) {
    w.emplace_back();
    for (const auto& x : ws.weights[i]) w.back().push_back(-x);
  }
  return make_weight_system(std::move(w));
}

using Edge = std::pair<int, int>;

struct Multigraph {
  FixedPointProfile profile;
  std::vector<Edge> edges;  // sorted

  int size() const { return static_cast<int>(edges.size()); }
  static bool is_cycle(const Edge& e) { return e.first == e.second; }
  bool operator==(const Multigraph& o) const { return profile == o.profile && edges == o.edges; }
  bool operator<(const Multigraph& o) const { return edges < o.edges; }
};

inline bool degrees_ok(const FixedPointProfile& p, const std::vector<Edge>& edges) {
  std::vector<int> out(p.points(), 0), in(p.points(), 0);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= p.points() || j >= p.points()) return false;
    ++out[i];
    ++in[j];
  }
  for (int i = 0; i < p.points(); ++i)
    if (out[i] != p.n - p.lambdas[i] || in[i] != p.lambdas[i]) return false;
  return true;
}

inline Multigraph make_multigraph(const FixedPointProfile& p, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  if (!degrees_ok(p, edges))
    throw Error(ErrorKind::SchemaError, "edge multiset violates the degree constraints");
  return Multigraph{p, std::move(edges)};
}

// Edges carry positive weight labels; kept sorted by (edge, weight).
struct WeightedMultigraph {
  Multigraph graph;
  std::vector<Int> w;

  bool operator==(const WeightedMultigraph& o) const { return graph == o.graph && w == o.w; }
  bool operator<(const WeightedMultigraph& o) const {
    if (graph.edges != o.graph.edges) return graph.edges < o.graph.edges;
    return w < o.w;
  }
};

inline WeightedMultigraph make_weighted(const FixedPointProfile& p,
                                        std::vector<std::pair<Edge, Int>> labeled) {
  std::sort(labeled.begin(), labeled.end());
  std::vector<Edge> e;
  std::vector<Int> w;
  for (auto& [edge, x] : labeled) {
    if (x <= 0) throw Error(ErrorKind::Precondition, "edge weights must be positive");
    e.push_back(edge);
    w.push_back(x);
  }
  return WeightedMultigraph{make_multigraph(p, std::move(e)), std::move(w)};
}

// Signed read-back: +w(e) at the source, -w(e) at the target, both for a cycle.
inline WeightSystem read_weights(const WeightedMultigraph& g) {
  const auto& p = g.graph.profile;
  std::vector<std::vector<Int>> w(p.points());
  for (int h = 0; h < g.graph.size(); ++h) {
    auto [i, j] = g.graph.edges[h];
    w[i].push_back(g.w[h]);
    w[j].push_back(-g.w[h]);
  }
  return make_weight_system(std::move(w), p.lambdas);
}

struct MagnitudeLabeling {
  Multigraph graph;
  std::vector<Rat> m;  // aligned with graph.edges
};

struct StructuralReport {
  bool pairing = true;
  bool lambda_counts = true;
  bool coprime = true;
  std::vector<int> gcd_failures;  // points whose weights share a factor
  bool ok() const { return pairing && lambda_counts && coprime; }
};

inline StructuralReport weight_system_checks(const WeightSystem& ws) {
  StructuralReport r;
  std::vector<Int> pos, neg;
  for (int i = 0; i < ws.points(); ++i) {
    int negatives = 0;
    Int g = 0;
    for (const auto& x : ws.weights[i]) {
      if (x < 0) {
        ++negatives;
        neg.push_back(-x);
      } else {
        pos.push_back(x);
      }
      g = gcd(g, x);
    }
    if (negatives != ws.profile.lambdas[i]) r.lambda_counts = false;
    if (g != 1) {
      r.coprime = false;
      r.gcd_failures.push_back(i);
    }
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  r.pairing = pos == neg;
  return r;
}

}  // namespace hc
