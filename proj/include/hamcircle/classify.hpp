#pragma once

#include <atomic>
#include <chrono>
#include <climits>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "fixtures.hpp"
#include "hattori.hpp"
#include "io.hpp"
#include "search.hpp"

namespace hc {

inline constexpr const char* kVersion = "hamcircle-0.1.0";

struct ClassifyConfig {
  SearchOptions opts;
  GraphFilter filter = GraphFilter::Nonnegative;
  Dedup dedup = Dedup::Reversal;
  int jobs = 1;
  std::string checkpoint;                  // empty: no checkpoint file
  std::optional<std::vector<int>> graphs;  // restrict to these graph ids
  std::optional<long> c1_block_limit;      // sample only the first blocks of the C = 1 sweep
  long fold_sample = 64;
  std::function<void(const std::string&)> log;
};

// One shared-nothing unit of search work.
struct Block {
  int graph = 0;
  long C = 1;
  long first = LONG_MIN;  // LONG_MIN: no free position
};

struct GraphAudit {
  int graph_id = 0;
  Multigraph graph;
  std::vector<long> divisors;
  long blocks = 0;
  long search_hits = 0;            // labelings with every component determinant zero
  long no_positive_nullvector = 0;
  long families = 0;
  long generic_families = 0;
  long instances = 0;
  std::map<std::string, long> rejected;  // first failing check -> count
  long survivors = 0;
  double seconds = 0;  // search and analysis wall time
};

struct Candidate {
  int graph_id = 0;
  long C = 1;
  Multigraph graph;
  std::vector<Int> m;
  NullspaceDescription nullspace;
  int nullity = 0;
  bool generic = false;
  long survivor_count = 0;
  std::vector<WeightSystem> survivors;
};

struct ClassifiedFamily {
  std::string kind;  // parametric | isolated
  std::string name;
  int graph_id = 0;
  Multigraph graph;
  std::vector<Int> m;
  long C = 1;
  NullspaceDescription nullspace;
  int nullity = 0;
  bool generic = false;
  std::vector<int> params;                            // edge index behind b[k+1]
  std::vector<std::vector<std::vector<Rat>>> forms;   // point -> weight -> coefficients over b
  std::vector<WeightSystem> instances;
  long survivor_count = 0;
};

struct FoldRecord {
  int graph_id = 0;
  std::vector<Int> m;
  std::string into;
  std::string instance;  // empty for a whole family
};

struct ClassifyResult {
  FixedPointProfile profile;
  long graph_classes = 0;
  std::vector<GraphAudit> audit;
  std::vector<ClassifiedFamily> families;
  std::vector<FoldRecord> folded;
  long blocks_total = 0, blocks_resumed = 0;
};

namespace detail {

// Signed weights per point for an arbitrary (possibly non-positive) edge vector.
inline std::vector<std::vector<Int>> raw_weights(const Multigraph& g, const std::vector<Int>& w) {
  std::vector<std::vector<Int>> out(g.profile.points());
  for (int h = 0; h < g.size(); ++h) {
    out[g.edges[h].first].push_back(w[h]);
    out[g.edges[h].second].push_back(-w[h]);
  }
  return out;
}

// Do the localization identities and the two C1 expressions agree on the whole
// kernel? Tested at seeded random integer points.
inline bool identities_generic(const Multigraph& g, const NullspaceDescription& ns, int points = 8) {
  const auto& p = g.profile;
  int n = p.n, k = static_cast<int>(ns.basis.size());
  if (k == 0) return false;
  std::mt19937_64 rng(0x5eed1234ULL);
  std::uniform_int_distribution<long> pick(-40, 40);
  auto mds = multidegrees_below(n);
  int into1 = -1, outof = -1;
  if (p.minimal && n >= 2)
    for (int h = 0; h < g.size(); ++h) {
      if (g.edges[h].second == 1 && into1 < 0) into1 = h;
      if (g.edges[h].first == n - 1 && outof < 0) outof = h;
    }
  int done = 0;
  for (int attempt = 0; done < points && attempt < 50 * points; ++attempt) {
    std::vector<Int> w(g.size(), 0);
    for (int j = 0; j < k; ++j) {
      long r = pick(rng);
      for (int h = 0; h < g.size(); ++h) w[h] += ns.basis[j][h] * r;
    }
    bool zero = false;
    for (const auto& x : w) zero = zero || x == 0;
    if (zero) continue;
    auto W = raw_weights(g, w);
    for (const auto& md : mds)
      if (abbv_sum_raw(W, md) != 0) return false;
    if (abbv_sum_raw(W, {n}) != p.points()) return false;
    if (into1 >= 0 && outof >= 0) {
      auto sum = [&](int P) {
        Int s = 0;
        for (const auto& x : W[P]) s += x;
        return s;
      };
      Rat a(sum(1) - sum(0), -w[into1]), b(sum(n - 1) - sum(n), w[outof]);
      a.canonicalize();
      b.canonicalize();
      if (a != b) return false;
    }
    ++done;
  }
  return done == points;
}

inline std::string instance_key(const WeightSystem& ws) { return to_json(ws).dump(); }

inline WeightSystem canonical_up_to_reversal(const WeightSystem& ws) {
  if (!ws.profile.symmetric()) return ws;
  WeightSystem r = reversed(ws);
  return r < ws ? r : ws;
}

inline std::vector<std::pair<Edge, Rat>> labeled_edges(const Multigraph& g, const std::vector<Rat>& m) {
  std::vector<std::pair<Edge, Rat>> out;
  for (int h = 0; h < g.size(); ++h) out.emplace_back(g.edges[h], m[h]);
  std::sort(out.begin(), out.end());
  return out;
}

// Inverse of a square invertible matrix by Gauss-Jordan on [M | I].
inline RationalMatrix inverse(const RationalMatrix& M) {
  int k = M.rows;
  RationalMatrix A(k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) A(i, j) = M(i, j);
    A(i, k + i) = 1;
  }
  Echelon e = rref(A);
  RationalMatrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = e.R(i, k + j);
  return out;
}

}  // namespace detail

// Is ws (or its reversal) carried by some pairing onto this graph with these magnitudes?
class MembershipCache {
 public:
  bool member(const WeightSystem& ws, const Multigraph& g, const std::vector<Int>& m) {
    std::vector<Rat> mr(m.begin(), m.end());
    auto want = detail::labeled_edges(g, mr);
    for (const auto& cand : variants(ws))
      for (const auto& [edges, lab] : labelings(cand))
        if (edges == g.edges && lab == want) return true;
    return false;
  }

 private:
  using Entry = std::vector<std::pair<std::vector<Edge>, std::vector<std::pair<Edge, Rat>>>>;
  std::map<std::string, Entry> cache_;

  static std::vector<WeightSystem> variants(const WeightSystem& ws) {
    std::vector<WeightSystem> v{ws};
    if (ws.profile.symmetric()) v.push_back(reversed(ws));
    return v;
  }
  const Entry& labelings(const WeightSystem& ws) {
    auto key = detail::instance_key(ws);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Entry e;
    for (const auto& wg : all_pairings(ws)) {
      auto ml = magnitudes_from_weights(wg, ws);
      e.emplace_back(wg.graph.edges, detail::labeled_edges(wg.graph, ml.m));
    }
    return cache_.emplace(key, std::move(e)).first->second;
  }
};

// Which checks reject an instance; empty when it survives.
inline std::string first_rejection(const WeightedMultigraph& wg, const WeightSystem& ws, const SearchOptions& o) {
  auto s = weight_system_checks(ws);
  if (!s.pairing) return "structural:pairing";
  if (!s.lambda_counts) return "structural:lambda_counts";
  if (!s.coprime) return "structural:coprime";
  auto c = chern_battery(ws);
  for (const auto& ch : c.checks)
    if (!ch.pass) return "chern:" + ch.name;
  auto f = lemma_filters(wg, ws, o);
  if (auto* bad = f.first_failure()) return "lemma:" + bad->name;
  return "";
}

inline std::string family_name(const WeightSystem& ws) {
  const auto& p = ws.profile;
  if (p.minimal) {
    if (auto L = derive_levels(ws, p.n + 1)) {
      if (cp_check(ws, *L)) return "CP^" + std::to_string(p.n);
    }
  }
  if (p.minimal && p.n == 3) {
    for (const auto& s : {ws, reversed(ws)}) {
      if (s == v5_fixture()) return "V5";
      if (s == v22_fixture()) return "V22";
      const auto& w0 = s.weights[0];
      if (w0.size() == 3 && w0[0] > 0) {
        Int x0 = w0[1], x1 = w0[2] - w0[1];
        if (x0.fits_slong_p() && x1.fits_slong_p() && x0 > x1 && x1 > 0) {
          try {
            if (grassmannian_fixture({x0.get_si(), x1.get_si()}) == s) return "Gr2+(R5)";
          } catch (const Error&) {
          }
        }
      }
    }
  }
  return "";
}

// Linear forms of every weight in terms of k edge weights b[1..k].
inline void parametrize(ClassifiedFamily& f) {
  const auto& g = f.graph;
  int E = g.size(), k = static_cast<int>(f.nullspace.basis.size());
  std::vector<int> pref(E);
  std::iota(pref.begin(), pref.end(), 0);
  std::stable_sort(pref.begin(), pref.end(), [&](int a, int b) {
    auto key = [&](int h) { return std::make_pair(std::min(g.edges[h].first, g.edges[h].second),
                                                  std::max(g.edges[h].first, g.edges[h].second)); };
    return key(a) < key(b);
  });
  std::vector<int> chosen;
  for (int h : pref) {
    if (static_cast<int>(chosen.size()) == k) break;
    auto trial = chosen;
    trial.push_back(h);
    RationalMatrix S(static_cast<int>(trial.size()), k);
    for (size_t a = 0; a < trial.size(); ++a)
      for (int j = 0; j < k; ++j) S(static_cast<int>(a), j) = f.nullspace.basis[j][trial[a]];
    if (rank(S) == static_cast<int>(trial.size())) chosen = trial;
  }
  RationalMatrix Bsel(k, k);
  for (int a = 0; a < k; ++a)
    for (int j = 0; j < k; ++j) Bsel(a, j) = f.nullspace.basis[j][chosen[a]];
  RationalMatrix inv = detail::inverse(Bsel);
  // w_h = sum_j basis[j][h] c_j and c = inv b
  std::vector<std::vector<Rat>> coef(E, std::vector<Rat>(k, 0));
  for (int h = 0; h < E; ++h)
    for (int a = 0; a < k; ++a)
      for (int j = 0; j < k; ++j) coef[h][a] += Rat(f.nullspace.basis[j][h]) * inv(j, a);
  f.params = chosen;
  f.forms.assign(g.profile.points(), {});
  for (int P = 0; P < g.profile.points(); ++P) {
    std::vector<std::vector<Rat>> at;
    for (int h = 0; h < E; ++h) {
      if (g.edges[h].first == P) at.push_back(coef[h]);
      if (g.edges[h].second == P) {
        auto c = coef[h];
        for (auto& x : c) x = -x;
        at.push_back(c);
      }
    }
    f.forms[P] = std::move(at);
  }
}

inline std::string linear_form(const std::vector<Rat>& c) {
  std::string s;
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    Rat a = abs(c[j]);
    if (!s.empty()) s += c[j] > 0 ? "+" : "-";
    else if (c[j] < 0) s += "-";
    if (a != 1) s += a.get_str() + "*";
    s += "b[" + std::to_string(j + 1) + "]";
  }
  return s.empty() ? "0" : s;
}

inline std::string instance_text(const WeightSystem& ws) {
  std::string s;
  for (int i = 0; i < ws.points(); ++i) {
    s += i ? ", {" : "{";
    for (size_t k = 0; k < ws.weights[i].size(); ++k) s += (k ? "," : "") + ws.weights[i][k].get_str();
    s += "}";
  }
  return s;
}

inline std::string cache_key(const FixedPointProfile& p, const ClassifyConfig& c) {
  json j = {{"version", kVersion},
            {"n", p.n},
            {"lambdas", p.lambdas},
            {"filter", static_cast<int>(c.filter)},
            {"dedup", static_cast<int>(c.dedup)},
            {"mode", static_cast<int>(c.opts.mode)},
            {"D", c.opts.D},
            {"C", c.opts.divisor_C ? *c.opts.divisor_C : 0},
            {"unit", c.opts.force_unit_edges},
            {"dim8", c.opts.dim8_strict},
            {"positive_parts", c.opts.positive_parts}};
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

using BlockHits = std::vector<std::vector<long>>;

inline std::string block_id(const Block& b) {
  return std::to_string(b.graph) + "/" + std::to_string(b.C) + "/" +
         (b.first == LONG_MIN ? std::string("-") : std::to_string(b.first));
}

inline std::map<std::string, BlockHits> load_checkpoint(const std::string& path, const std::string& key) {
  std::map<std::string, BlockHits> done;
  if (path.empty() || !std::filesystem::exists(path)) return done;
  json j = read_json_file(path);
  if (j.value("key", "") != key) throw Error(ErrorKind::SchemaError, "checkpoint " + path + " belongs to other options");
  for (const auto& b : j.at("blocks")) {
    Block blk{b.at("graph_id").get<int>(), b.at("C").get<long>(),
              b.at("prefix_index").is_null() ? LONG_MIN : b.at("prefix_index").get<long>()};
    done[block_id(blk)] = b.at("survivors").get<BlockHits>();
  }
  return done;
}

inline void save_checkpoint(const std::string& path, const std::string& key, const std::vector<Block>& blocks,
                            const std::vector<std::optional<BlockHits>>& hits) {
  json arr = json::array();
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (!hits[i]) continue;
    arr.push_back({{"graph_id", blocks[i].graph},
                   {"C", blocks[i].C},
                   {"prefix_index", blocks[i].first == LONG_MIN ? json(nullptr) : json(blocks[i].first)},
                   {"survivors", *hits[i]}});
  }
  write_atomically(path, json({{"key", key}, {"blocks", arr}}).dump() + "\n");
}

}  // namespace detail

// Search every block, solve each hit, filter instances, then merge families.
inline ClassifyResult classify(const FixedPointProfile& profile, const ClassifyConfig& cfg) {
  const auto& o = cfg.opts;
  check_search_preconditions(profile, o);
  auto log = [&](const std::string& s) {
    if (cfg.log) cfg.log(s);
  };
  ClassifyResult res;
  res.profile = profile;
  auto graphs = enumerate_multigraphs(profile, cfg.filter, cfg.dedup);
  res.graph_classes = static_cast<long>(graphs.size());
  std::vector<int> ids;
  if (cfg.graphs) {
    for (int id : *cfg.graphs) {
      if (id < 0 || id >= static_cast<int>(graphs.size()))
        throw Error(ErrorKind::Precondition, "graph id " + std::to_string(id) + " out of range");
      ids.push_back(id);
    }
  } else {
    for (int i = 0; i < static_cast<int>(graphs.size()); ++i) ids.push_back(i);
  }

  // plans and blocks, in graph order then descending C
  std::map<std::pair<int, long>, SearchPlan> plans;
  std::vector<Block> blocks;
  for (int id : ids) {
    GraphAudit a;
    a.graph_id = id;
    a.graph = graphs[id];
    a.divisors = divisor_candidates(graphs[id], o);
    for (long C : a.divisors) {
      auto& plan = plans[{id, C}] = make_plan(graphs[id], o, C);
      if (!plan.feasible) continue;
      if (plan.order.empty()) {
        blocks.push_back({id, C, LONG_MIN});
        continue;
      }
      auto firsts = first_values(plan);
      long used = 0;
      for (long v : firsts) {
        if (C == 1 && cfg.c1_block_limit && used >= *cfg.c1_block_limit) break;
        blocks.push_back({id, C, v});
        ++used;
      }
    }
    res.audit.push_back(std::move(a));
  }
  res.blocks_total = static_cast<long>(blocks.size());

  std::string key = cache_key(profile, cfg);
  auto done = detail::load_checkpoint(cfg.checkpoint, key);
  std::vector<std::optional<detail::BlockHits>> hits(blocks.size());
  std::vector<double> block_seconds(blocks.size(), 0);
  for (size_t i = 0; i < blocks.size(); ++i) {
    auto it = done.find(detail::block_id(blocks[i]));
    if (it != done.end()) {
      hits[i] = it->second;
      ++res.blocks_resumed;
    }
  }

  std::atomic<size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&]() {
    for (;;) {
      size_t i = next++;
      if (i >= blocks.size()) return;
      if (hits[i]) continue;
      try {
        const Block& b = blocks[i];
        detail::BlockHits out;
        auto t0 = std::chrono::steady_clock::now();
        std::optional<long> first;
        if (b.first != LONG_MIN) first = b.first;
        run_plan(plans.at({b.graph, b.C}), first, o, [&](const std::vector<long>& m) { out.push_back(m); });
        std::lock_guard<std::mutex> lk(mu);
        block_seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        hits[i] = std::move(out);
        if (!cfg.checkpoint.empty()) detail::save_checkpoint(cfg.checkpoint, key, blocks, hits);
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  log("search finished: " + std::to_string(blocks.size()) + " blocks");
  for (size_t i = 0; i < blocks.size(); ++i)
    if (hits[i] && !hits[i]->empty())
      log("block " + detail::block_id(blocks[i]) + ": " + std::to_string(hits[i]->size()) + " hits");

  // solve and filter, in block order
  std::map<int, size_t> audit_at;
  for (size_t i = 0; i < res.audit.size(); ++i) audit_at[res.audit[i].graph_id] = i;
  std::vector<Candidate> candidates;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    auto& a = res.audit[audit_at[b.graph]];
    auto t0 = std::chrono::steady_clock::now();
    ++a.blocks;
    for (const auto& mv : *hits[i]) {
      ++a.search_hits;
      std::vector<Int> m(mv.begin(), mv.end());
      auto fam = solve_weights(a.graph, m);
      if (!fam) {
        ++a.no_positive_nullvector;
        continue;
      }
      ++a.families;
      Candidate c;
      c.graph_id = b.graph;
      c.C = b.C;
      c.graph = a.graph;
      c.m = m;
      c.nullspace = fam->nullspace;
      c.nullity = static_cast<int>(c.nullspace.basis.size());
      c.generic = detail::identities_generic(c.graph, c.nullspace);
      if (c.generic) ++a.generic_families;
      auto k = kernel_lattice(family_matrix(c.graph, m));
      for_each_positive_point(k, o.witness_bound, [&](const std::vector<long>& v) {
        std::vector<Int> w(v.begin(), v.end());
        auto wg = weighted(c.graph, w);
        auto ws = read_weights(wg);
        ++a.instances;
        std::string why = first_rejection(wg, ws, o);
        if (!why.empty()) {
          ++a.rejected[why];
          return true;
        }
        ++a.survivors;
        ++c.survivor_count;
        if (!c.generic || static_cast<long>(c.survivors.size()) < cfg.fold_sample) c.survivors.push_back(ws);
        return true;
      });
      if (c.survivor_count > 0) candidates.push_back(std::move(c));
    }
    a.seconds += block_seconds[i] + std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  log("candidates with survivors: " + std::to_string(candidates.size()));

  // merge
  MembershipCache mc;
  auto member_of_kept = [&](const WeightSystem& ws) -> std::string {
    for (size_t f = 0; f < res.families.size(); ++f)
      if (mc.member(ws, res.families[f].graph, res.families[f].m)) return "family " + std::to_string(f + 1);
    return "";
  };
  std::vector<const Candidate*> generic, rigid;
  for (const auto& c : candidates) (c.generic ? generic : rigid).push_back(&c);
  std::stable_sort(generic.begin(), generic.end(), [](const Candidate* x, const Candidate* y) {
    if (x->nullity != y->nullity) return x->nullity > y->nullity;
    if (x->graph_id != y->graph_id) return x->graph_id < y->graph_id;
    return x->m < y->m;
  });
  auto make_family = [&](const Candidate& c) {
    ClassifiedFamily f;
    f.graph_id = c.graph_id;
    f.graph = c.graph;
    f.m = c.m;
    f.C = c.C;
    f.nullspace = c.nullspace;
    f.nullity = c.nullity;
    f.generic = c.generic;
    f.survivor_count = c.survivor_count;
    return f;
  };
  for (const Candidate* c : generic) {
    std::string into;
    for (const auto& s : c->survivors) {
      into = member_of_kept(s);
      if (into.empty()) break;
    }
    if (!into.empty()) {
      res.folded.push_back({c->graph_id, c->m, into, ""});
      continue;
    }
    ClassifiedFamily f = make_family(*c);
    if (c->nullity >= 2) {
      f.kind = "parametric";
      f.instances = c->survivors;
      parametrize(f);
    } else {
      f.kind = "isolated";
      f.instances = {detail::canonical_up_to_reversal(c->survivors.front())};
    }
    std::string name = family_name(c->survivors.front());
    for (const auto& s : c->survivors)
      if (family_name(s) != name) name.clear();
    f.name = name;
    res.families.push_back(std::move(f));
  }
  std::set<std::string> seen;
  for (const auto& f : res.families)
    if (f.kind == "isolated") seen.insert(detail::instance_key(f.instances.front()));
  for (const Candidate* c : rigid) {
    for (const auto& s : c->survivors) {
      WeightSystem canon = detail::canonical_up_to_reversal(s);
      std::string k = detail::instance_key(canon);
      if (seen.count(k)) continue;
      seen.insert(k);
      std::string into = member_of_kept(s);
      if (!into.empty()) {
        res.folded.push_back({c->graph_id, c->m, into, instance_text(s)});
        continue;
      }
      ClassifiedFamily f = make_family(*c);
      f.kind = "isolated";
      f.instances = {canon};
      f.survivor_count = 1;
      f.name = family_name(canon);
      res.families.push_back(std::move(f));
    }
  }
  return res;
}

// ---- reports ----

inline json to_json(const ClassifiedFamily& f) {
  json basis = json::array();
  for (const auto& v : f.nullspace.basis) {
    json row = json::array();
    for (const auto& x : v) row.push_back(int_json(x));
    basis.push_back(row);
  }
  json m = json::array();
  for (const auto& x : f.m) m.push_back(int_json(x));
  json forms = json::array();
  for (const auto& pt : f.forms) {
    json at = json::array();
    for (const auto& c : pt) at.push_back(linear_form(c));
    forms.push_back(at);
  }
  json params = json::array();
  for (int h : f.params) params.push_back({f.graph.edges[h].first, f.graph.edges[h].second});
  json inst = json::array();
  for (const auto& ws : f.instances) inst.push_back(to_json(ws));
  return {{"name", f.name},         {"kind", f.kind},       {"graph_id", f.graph_id},
          {"graph", to_json(f.graph)}, {"magnitudes", m},    {"C", f.C},
          {"nullity", f.nullity},   {"generic", f.generic}, {"nullspace_basis", basis},
          {"parameters", params},   {"weights", forms},     {"instances", inst},
          {"survivors", f.survivor_count}};
}

inline json families_json(const ClassifyResult& r) {
  json arr = json::array();
  for (const auto& f : r.families) arr.push_back(to_json(f));
  return {{"n", r.profile.n}, {"lambdas", r.profile.lambdas}, {"families", arr}};
}

inline json audit_json(const ClassifyResult& r) {
  json graphs = json::array();
  long hits = 0, inst = 0, surv = 0;
  for (const auto& a : r.audit) {
    json rej = json::object();
    for (const auto& [k, v] : a.rejected) rej[k] = v;
    graphs.push_back({{"graph_id", a.graph_id},
                      {"edges", to_json(a.graph)["edges"]},
                      {"divisors", a.divisors},
                      {"blocks", a.blocks},
                      {"search_hits", a.search_hits},
                      {"no_positive_nullvector", a.no_positive_nullvector},
                      {"families", a.families},
                      {"generic_families", a.generic_families},
                      {"instances", a.instances},
                      {"rejected", rej},
                      {"survivors", a.survivors},
                      {"seconds", a.seconds}});
    hits += a.search_hits;
    inst += a.instances;
    surv += a.survivors;
  }
  json folded = json::array();
  for (const auto& f : r.folded) {
    json m = json::array();
    for (const auto& x : f.m) m.push_back(int_json(x));
    folded.push_back({{"graph_id", f.graph_id}, {"magnitudes", m}, {"into", f.into}, {"instance", f.instance}});
  }
  return {{"n", r.profile.n},
          {"lambdas", r.profile.lambdas},
          {"graph_classes", r.graph_classes},
          {"graphs_examined", static_cast<long>(r.audit.size())},
          {"blocks", r.blocks_total},
          {"blocks_resumed", r.blocks_resumed},
          {"totals", {{"search_hits", hits}, {"instances", inst}, {"survivors", surv}}},
          {"graphs", graphs},
          {"folded", folded},
          {"families", static_cast<long>(r.families.size())}};
}

inline std::string table_text(const ClassifyResult& r) {
  std::ostringstream out;
  out << "n = " << r.profile.n << ", lambdas = (";
  for (size_t i = 0; i < r.profile.lambdas.size(); ++i) out << (i ? "," : "") << r.profile.lambdas[i];
  out << ")\n";
  out << "graph classes: " << r.graph_classes << ", examined: " << r.audit.size() << "\n";
  out << "families: " << r.families.size() << "\n";
  for (size_t i = 0; i < r.families.size(); ++i) {
    const auto& f = r.families[i];
    out << "\n[" << i + 1 << "] " << (f.name.empty() ? "unnamed" : f.name) << "  " << f.kind;
    if (f.kind == "parametric") out << " (nullity " << f.nullity << ")";
    out << "  C=" << f.C << "\n";
    out << "    graph:";
    for (const auto& [a, b] : f.graph.edges) out << " " << a << "->" << b;
    out << "\n    magnitudes:";
    for (const auto& x : f.m) out << " " << x.get_str();
    out << "\n";
    if (f.kind == "parametric") {
      out << "    parameters:";
      for (size_t k = 0; k < f.params.size(); ++k)
        out << " b[" << k + 1 << "]=w(" << f.graph.edges[f.params[k]].first << "->"
            << f.graph.edges[f.params[k]].second << ")";
      out << "\n";
      for (size_t P = 0; P < f.forms.size(); ++P) {
        out << "    P" << P << ": {";
        for (size_t k = 0; k < f.forms[P].size(); ++k) out << (k ? ", " : "") << linear_form(f.forms[P][k]);
        out << "}\n";
      }
    } else {
      out << "    weights: " << instance_text(f.instances.front()) << "\n";
    }
  }
  return out.str();
}

}  // namespace hc
