// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <set>

#include "hamcircle/hamcircle.hpp"
#include "oracles.hpp"

using namespace hc;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

ClassifyConfig minimal_config() {
  ClassifyConfig cfg;
  cfg.opts.force_unit_edges = true;
  return cfg;
}

Outcome dimension_four() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = classify(minimal_profile(2), minimal_config());
  double s = since(t0);
  o.require(r.families.size() == 1, "family count " + std::to_string(r.families.size()));
  if (r.families.size() == 1) {
    const auto& f = r.families[0];
    o.require(f.name == "CP^2", "name " + f.name);
    o.require(f.graph.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}, "graph");
    bool relation = f.nullspace.basis.size() == 2;
    for (const auto& b : f.nullspace.basis) relation = relation && b[1] == b[0] + b[2];
    o.require(relation, "w(e02) = w(e01) + w(e12)");
  }
  o.require(s < 1, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome dimension_six() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = classify(minimal_profile(3), minimal_config());
  double s = since(t0);
  o.require(r.graph_classes == 7, "graph classes " + std::to_string(r.graph_classes));
  std::multiset<std::string> names;
  for (const auto& f : r.families) names.insert(f.name);
  o.require(names == std::multiset<std::string>{"CP^3", "Gr2+(R5)", "V22", "V5"}, "family names");
  for (const auto& f : r.families) {
    if (f.name == "CP^3") o.require(f.nullity == 3, "CP^3 nullity");
    if (f.name == "Gr2+(R5)") o.require(f.nullity == 2, "Gr nullity");
    if (f.name == "V5") o.require(f.instances.size() == 1 && f.instances[0] == v5_fixture(), "V5 weights");
    if (f.name == "V22") o.require(f.instances.size() == 1 && f.instances[0] == v22_fixture(), "V22 weights");
  }
  o.require(s < 60, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome dimension_eight() {
  Outcome o;
  auto p = minimal_profile(4);
  // C in {1, 5} under the strict option: the whole C = 5 branch and a sampled C = 1 prefix.
  ClassifyConfig cfg = minimal_config();
  cfg.opts.dim8_strict = true;
  cfg.c1_block_limit = 2;
  auto r = classify(p, cfg);
  o.require(r.graph_classes == 75, "graph classes " + std::to_string(r.graph_classes));
  o.require(r.families.size() == 1, "family count " + std::to_string(r.families.size()));
  if (!r.families.empty()) {
    const auto& f = r.families[0];
    o.require(f.name == "CP^4", "name " + f.name);
    o.require(f.m == std::vector<Int>(10, 5), "magnitudes all 5");
    o.require(f.nullity == 4, "nullity " + std::to_string(f.nullity));
  }
  for (const auto& a : r.audit) o.require(a.seconds < 600, "graph " + std::to_string(a.graph_id) + " slow");
  // the C = 2 branch: every instance must fall to a filter
  ClassifyConfig two = minimal_config();
  two.opts.dim8_strict = true;
  two.opts.divisor_C = 2;
  auto r2 = classify(p, two);
  o.require(r2.families.empty(), "C = 2 branch left " + std::to_string(r2.families.size()) + " families");
  for (const auto& a : r2.audit) o.require(a.seconds < 600, "graph " + std::to_string(a.graph_id) + " slow at C=2");
  return o;
}

Outcome magnitude_sums() {
  Outcome o;
  o.require(magnitude_sum(validate_profile(2, {0, 1, 1, 2})) == 8, "S2xS2 profile");
  o.require(magnitude_sum(minimal_profile(2)) == 9, "n=2");
  o.require(magnitude_sum(minimal_profile(3)) == 24, "n=3");
  o.require(magnitude_sum(minimal_profile(4)) == 50, "n=4");
  for (const auto& ws : oracle::fixtures()) {
    Int T = magnitude_sum(ws.profile);
    for (const auto& wg : all_pairings(ws)) {
      Rat total = 0;
      for (const auto& x : magnitudes_from_weights(wg, ws).m) total += x;
      o.require(total == T, "pairing sum " + total.get_str() + " != " + T.get_str());
    }
  }
  return o;
}

Outcome localization() {
  Outcome o;
  for (const auto& ws : oracle::fixtures()) {
    auto r = chern_battery(ws);
    for (const auto& [md, v] : r.zero_integrals)
      o.require(v == 0 && v == oracle::integral(ws.weights, md), "zero integral " + multidegree_name(md));
    o.require(r.c_n == ws.points(), "c_n");
    o.require(r.c1_cn1 == magnitude_sum(ws.profile), "c1 c_{n-1}");
    if (ws.profile.minimal) {
      for (int i = 0; i <= ws.n(); ++i)
        o.require(is_integer(r.Ci[i]) && r.Ci[i] > 0 && r.Ci[i] == r.Cpi[i], "C_i = C'_i > 0");
    }
  }
  o.require(chern_battery(s2xs2_fixture(2, 3)).c1_cn1 == 8, "S2xS2 8");
  o.require(chern_battery(v5_fixture()).c1_cn1 == 24, "V5 24");
  o.require(chern_battery(cp_fixture({4, 3, 2, 1, 0})).c1_cn1 == 50, "CP4 50");
  auto base = v5_fixture().weights;
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t k = 0; k < base[i].size(); ++k)
      for (int d : {-1, 1}) {
        auto w = base;
        w[i][k] += d;
        if (w[i][k] == 0) continue;
        bool broken = abbv_sum_raw(w, {1, 2}) != 24;
        for (const auto& md : multidegrees_below(3)) broken = broken || abbv_sum_raw(w, md) != 0;
        o.require(broken, "perturbation survives");
      }
  auto w = base;
  w[1] = {Int(-1), Int(1), Int(3)};
  o.require(abbv_sum_raw(w, {}) == Rat(-1, 12) && oracle::integral(w, {}) == Rat(-1, 12), "-1/12");
  return o;
}

Outcome hattori_suite() {
  Outcome o;
  struct Case {
    WeightSystem ws;
    long k0;
  };
  std::vector<Case> minimal{{cp_fixture({2, 1, 0}), 3},      {cp_fixture({5, 3, 1, 0}), 4},
                            {cp_fixture({4, 3, 2, 1, 0}), 5}, {grassmannian_fixture({2, 1}), 3},
                            {v5_fixture(), 2},                {v22_fixture(), 1}};
  for (const auto& c : minimal) {
    auto L = derive_levels(c.ws, c.k0);
    o.require(L && r_sequence(c.ws, *L).r_at_1[0] == 1, "r_0(1) = 1");
  }
  auto cp4 = cp_fixture({4, 3, 2, 1, 0});
  auto h = r_sequence(cp4, *derive_levels(cp4, 5, 4));
  Int total = 0;
  for (size_t s = 0; s < h.r.size(); ++s) {
    total += h.r_at_1[s];
    if (s > 0) o.require(h.r[s].zero(), "CP4 r_s = 0");
  }
  o.require(total == 1, "CP4 sum r_s(1)");
  auto gr = grassmannian_fixture({2, 1});
  auto hg = r_sequence(gr, *derive_levels(gr, 3));
  Int gt = 0;
  for (const auto& x : hg.r_at_1) gt += x;
  o.require(gt == 2, "Gr sum r_s(1) = " + gt.get_str());
  auto d5 = dim8_solver(5);
  o.require(d5.feasible && d5.solutions.size() == 1 && d5.solutions[0].l == 1 && d5.solutions[0].m == 10,
            "C1 = 5 gives (1, 10)");
  o.require(!dim8_solver(2).feasible, "C1 = 2 infeasible");
  std::set<Int> ls;
  for (const auto& s : dim8_solver(1, 60).solutions) ls.insert(s.l);
  o.require(ls == std::set<Int>{15, 25, 40, 60}, "C1 = 1 scan");
  for (const auto& x : exp_r(5, 1, 10)) o.require(x == 0, "closed forms at (5,1,10)");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (int n : {2, 3}) {
    auto p = minimal_profile(n);
    auto raw = oracle::graphs(p, true);
    o.require(oracle::edge_sets(enumerate_multigraphs(p, GraphFilter::Nonnegative, Dedup::None)) == raw,
              "raw graphs n=" + std::to_string(n));
    o.require(oracle::edge_sets(enumerate_multigraphs(p, GraphFilter::Nonnegative, Dedup::Reversal)) ==
                  oracle::classes(raw, n),
              "graph classes n=" + std::to_string(n));
    o.require(raw.size() == (n == 2 ? 2u : 9u), "raw count n=" + std::to_string(n));
  }
  for (const auto& M : oracle::nullvector_cases()) o.require(oracle::nullvector_agrees(M), "nullvector");
  int bad = oracle::as_index_disagreements(100, 2024);
  o.require(bad == 0, std::to_string(bad) + " index disagreements");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion all[] = {
      {"1 dimension 4 classification", dimension_four},
      {"2 dimension 6 classification", dimension_six},
      {"3 dimension 8 classification", dimension_eight},
      {"4 magnitude sums", magnitude_sums},
      {"5 localization battery", localization},
      {"6 Hattori suite", hattori_suite},
      {"7 oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << since(t0) << " s)";
    if (!o.pass) std::cout << "  " << o.detail;
    std::cout << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
