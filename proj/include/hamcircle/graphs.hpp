#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "linalg.hpp"

namespace hc {

enum class GraphFilter { All, Nonnegative, Positive };
enum class Dedup { None, Reversal };

// Vertex relabelling used by reversal: the k-th point in increasing lambda order
// goes to the k-th point in decreasing order. Minimal case: i -> N - i.
inline std::vector<int> reversal_map(const FixedPointProfile& p) {
  std::vector<int> order(p.points());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.lambdas[a] < p.lambdas[b]; });
  std::vector<int> sigma(p.points());
  for (int k = 0; k < p.points(); ++k) sigma[order[k]] = order[p.points() - 1 - k];
  for (int i = 0; i < p.points(); ++i)
    if (p.lambdas[sigma[i]] != p.n - p.lambdas[i])
      throw Error(ErrorKind::Precondition, "profile is not symmetric under reversal");
  return sigma;
}

inline Multigraph reverse(const Multigraph& g) {
  auto sigma = reversal_map(g.profile);
  std::vector<Edge> e;
  for (const auto& [i, j] : g.edges) e.emplace_back(sigma[j], sigma[i]);
  std::sort(e.begin(), e.end());
  return Multigraph{g.profile, std::move(e)};
}

struct GraphClass {
  Multigraph canonical;
  bool self_symmetric = false;
};

inline GraphClass graph_class(const Multigraph& g) {
  Multigraph r = reverse(g);
  GraphClass c;
  c.self_symmetric = r.edges == g.edges;
  c.canonical = r.edges < g.edges ? r : g;
  return c;
}

inline bool edge_allowed(const FixedPointProfile& p, int i, int j, GraphFilter f) {
  switch (f) {
    case GraphFilter::All: return true;
    case GraphFilter::Nonnegative: return p.lambdas[i] <= p.lambdas[j];
    case GraphFilter::Positive: return p.lambdas[i] < p.lambdas[j];
  }
  return false;
}

inline std::vector<Multigraph> enumerate_multigraphs(const FixedPointProfile& p, GraphFilter filter,
                                                     Dedup dedup) {
  int V = p.points();
  std::vector<Edge> pairs;
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j)
      if (edge_allowed(p, i, j, filter)) pairs.emplace_back(i, j);
  std::vector<int> out(V), in(V);
  for (int i = 0; i < V; ++i) {
    out[i] = p.n - p.lambdas[i];
    in[i] = p.lambdas[i];
  }
  // last pair index with source i, for early cuts
  std::vector<int> last_of(V, -1);
  for (int k = 0; k < static_cast<int>(pairs.size()); ++k) last_of[pairs[k].first] = k;

  std::vector<Multigraph> result;
  std::vector<Edge> cur;
  std::function<void(int)> rec = [&](int k) {
    if (k == static_cast<int>(pairs.size())) {
      for (int v = 0; v < V; ++v)
        if (out[v] != 0 || in[v] != 0) return;
      result.push_back(Multigraph{p, cur});
      return;
    }
    auto [i, j] = pairs[k];
    int top = std::min(out[i], in[j]);
    for (int c = 0; c <= top; ++c) {
      out[i] -= c;
      in[j] -= c;
      for (int t = 0; t < c; ++t) cur.emplace_back(i, j);
      if (!(last_of[i] == k && out[i] != 0)) rec(k + 1);
      for (int t = 0; t < c; ++t) cur.pop_back();
      out[i] += c;
      in[j] += c;
    }
  };
  for (int i = 0; i < V; ++i)
    if (last_of[i] < 0 && out[i] != 0)
      throw Error(ErrorKind::ProfileUnrealizable, "a point has out-edges but no admissible target");
  rec(0);
  for (auto& g : result) std::sort(g.edges.begin(), g.edges.end());
  if (result.empty())
    throw Error(ErrorKind::ProfileUnrealizable, "degree constraints admit no edge multiset");
  if (dedup == Dedup::Reversal) {
    std::set<std::vector<Edge>> seen;
    std::vector<Multigraph> reps;
    for (const auto& g : result) {
      auto c = graph_class(g);
      if (seen.insert(c.canonical.edges).second) reps.push_back(c.canonical);
    }
    result = std::move(reps);
  }
  std::sort(result.begin(), result.end());
  return result;
}

struct Component {
  std::vector<int> vertices;
  std::vector<int> edges;  // indices into graph.edges
};

struct Decomposition {
  std::vector<Component> components;
  std::vector<int> cycles;
  // components' edges in order, then cycles
  std::vector<int> order() const {
    std::vector<int> o;
    for (const auto& c : components) o.insert(o.end(), c.edges.begin(), c.edges.end());
    o.insert(o.end(), cycles.begin(), cycles.end());
    return o;
  }
};

inline Decomposition components_and_cycles(const Multigraph& g) {
  int V = g.profile.points();
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  Decomposition d;
  std::vector<bool> touched(V, false);
  for (int h = 0; h < g.size(); ++h) {
    auto [i, j] = g.edges[h];
    if (i == j) {
      d.cycles.push_back(h);
      continue;
    }
    touched[i] = touched[j] = true;
    parent[find(i)] = find(j);
  }
  std::map<int, int> slot;  // root -> component index, in order of first edge
  for (int h = 0; h < g.size(); ++h) {
    auto [i, j] = g.edges[h];
    if (i == j) continue;
    int r = find(i);
    auto it = slot.find(r);
    if (it == slot.end()) {
      it = slot.emplace(r, static_cast<int>(d.components.size())).first;
      d.components.emplace_back();
    }
    d.components[it->second].edges.push_back(h);
  }
  for (int v = 0; v < V; ++v)
    if (touched[v]) d.components[slot.at(find(v))].vertices.push_back(v);
  return d;
}

// A slot is (point, index into the sorted weights at that point).
using Slot = std::pair<int, int>;
using Pairing = std::vector<std::pair<Slot, Slot>>;  // (positive slot, negative slot)

inline WeightedMultigraph graph_from_pairing(const WeightSystem& ws, const Pairing& pairing) {
  std::set<Slot> used;
  std::vector<std::pair<Edge, Int>> labeled;
  for (const auto& [ps, ns] : pairing) {
    const Int& a = ws.weights.at(ps.first).at(ps.second);
    const Int& b = ws.weights.at(ns.first).at(ns.second);
    if (a <= 0 || a != -b)
      throw Error(ErrorKind::PairingMismatch,
                  "weight " + a.get_str() + " paired with " + b.get_str());
    if (!used.insert(ps).second || !used.insert(ns).second)
      throw Error(ErrorKind::PairingMismatch, "slot used twice");
    labeled.push_back({{ps.first, ns.first}, a});
  }
  if (static_cast<int>(used.size()) != ws.points() * ws.n())
    throw Error(ErrorKind::PairingMismatch, "pairing does not cover every slot");
  return make_weighted(ws.profile, std::move(labeled));
}

inline MagnitudeLabeling magnitudes_from_weights(const WeightedMultigraph& wg, const WeightSystem& ws) {
  MagnitudeLabeling m{wg.graph, {}};
  for (int h = 0; h < wg.graph.size(); ++h) {
    auto [i, j] = wg.graph.edges[h];
    if (i == j) m.m.emplace_back(0);
    else m.m.emplace_back(frac(ws.sum(i) - ws.sum(j), wg.w[h]));
  }
  for (auto& x : m.m) x.canonicalize();
  return m;
}

// All weighted multigraphs induced by pairings of ws. Pairings that only swap
// equal weights at a point give the same multigraph and are produced once.
inline std::vector<WeightedMultigraph> all_pairings(const WeightSystem& ws) {
  std::map<Int, std::pair<std::vector<int>, std::vector<int>>> byval;  // |w| -> (sources, targets)
  for (int i = 0; i < ws.points(); ++i)
    for (const auto& x : ws.weights[i]) {
      if (x > 0) byval[x].first.push_back(i);
      else byval[-x].second.push_back(i);
    }
  struct Group {
    Int value;
    std::vector<int> src, dst;  // distinct points
    std::vector<int> src_count, dst_count;
  };
  std::vector<Group> groups;
  for (auto& [v, st] : byval) {
    if (st.first.size() != st.second.size()) return {};
    Group g;
    g.value = v;
    std::map<int, int> sc, dc;
    for (int s : st.first) ++sc[s];
    for (int t : st.second) ++dc[t];
    for (auto [k, c] : sc) g.src.push_back(k), g.src_count.push_back(c);
    for (auto [k, c] : dc) g.dst.push_back(k), g.dst_count.push_back(c);
    groups.push_back(std::move(g));
  }
  std::vector<WeightedMultigraph> out;
  std::vector<std::pair<Edge, Int>> cur;
  std::vector<std::vector<int>> rowrem(groups.size()), colrem(groups.size());
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    rowrem[gi] = groups[gi].src_count;
    colrem[gi] = groups[gi].dst_count;
  }
  // contingency tables of (source point, target point) counts, one group at a time
  std::function<void(size_t, size_t)> fill = [&](size_t gi, size_t cell) {
    if (gi == groups.size()) {
      out.push_back(make_weighted(ws.profile, cur));
      return;
    }
    const Group& g = groups[gi];
    size_t D = g.dst.size();
    size_t r = cell / D, c = cell % D;
    if (r == g.src.size()) {
      fill(gi + 1, 0);
      return;
    }
    auto& rr = rowrem[gi];
    auto& cc = colrem[gi];
    int lo = c + 1 == D ? rr[r] : 0;
    int hi = std::min(rr[r], cc[c]);
    for (int take = lo; take <= hi; ++take) {
      rr[r] -= take;
      cc[c] -= take;
      for (int t = 0; t < take; ++t) cur.push_back({{g.src[r], g.dst[c]}, g.value});
      fill(gi, cell + 1);
      for (int t = 0; t < take; ++t) cur.pop_back();
      rr[r] += take;
      cc[c] += take;
    }
  };
  fill(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool integral(const MagnitudeLabeling& m) {
  for (const auto& x : m.m)
    if (!is_integer(x)) return false;
  return true;
}

inline std::vector<WeightedMultigraph> integral_multigraphs(const WeightSystem& ws) {
  std::vector<WeightedMultigraph> out;
  for (auto& g : all_pairings(ws))
    if (integral(magnitudes_from_weights(g, ws))) out.push_back(std::move(g));
  return out;
}

}  // namespace hc
