// Command-line front end: enumerate, classify, verify, hattori, fixture, scan-c1eq1.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hamcircle/hamcircle.hpp"

namespace fs = std::filesystem;
using hc::json;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitInfeasible = 3;

struct ProfileArgs {
  int n = 0;
  bool minimal = false;
  std::vector<int> lambdas;
};

void add_profile_flags(CLI::App* cmd, ProfileArgs& p) {
  cmd->add_option("--n", p.n, "half dimension")->required();
  cmd->add_flag("--minimal", p.minimal, "minimal profile lambda = (0,1,...,n)");
  cmd->add_option("--lambdas", p.lambdas, "lambda of every fixed point");
}

hc::FixedPointProfile profile_of(const ProfileArgs& a) {
  if (a.minimal == !a.lambdas.empty())
    throw hc::Error(hc::ErrorKind::Precondition, "give exactly one of --minimal and --lambdas");
  return a.minimal ? hc::minimal_profile(a.n) : hc::validate_profile(a.n, a.lambdas);
}

hc::GraphFilter parse_filter(const std::string& s) {
  if (s == "all") return hc::GraphFilter::All;
  if (s == "nonneg") return hc::GraphFilter::Nonnegative;
  return hc::GraphFilter::Positive;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    hc::write_atomically(out, text);
  }
}

json hattori_report(const hc::WeightSystem& ws, std::optional<long> k0, long lmax) {
  json rep;
  std::vector<long> tries;
  if (k0) {
    tries.push_back(*k0);
  } else {
    for (long k = ws.points(); k >= 1; --k) tries.push_back(k);
  }
  json levels = json::array();
  for (long k : tries) {
    auto L = hc::derive_levels(ws, k);
    if (!L) continue;
    json entry = {{"k0", k}, {"d", hc::int_json(L->d)}};
    json a = json::array();
    for (const auto& x : L->a) a.push_back(hc::int_json(x));
    entry["a"] = a;
    try {
      auto h = hc::r_sequence(ws, *L);
      json r1 = json::array(), rs = json::array();
      hc::Int total = 0;
      for (size_t s = 0; s < h.r.size(); ++s) {
        r1.push_back(hc::int_json(h.r_at_1[s]));
        rs.push_back(h.r[s].str());
        total += h.r_at_1[s];
      }
      entry["r_values_at_1"] = r1;
      entry["r"] = rs;
      entry["sum_r_at_1"] = hc::int_json(total);
      entry["laurent_ok"] = true;
      if (ws.profile.minimal && k == ws.n() + 1) entry["cp_check"] = hc::cp_check(ws, *L);
    } catch (const hc::Error& e) {
      entry["laurent_ok"] = false;
      entry["error"] = e.what();
    }
    levels.push_back(entry);
  }
  rep["levels"] = levels;
  if (ws.profile.minimal && ws.n() == 4) {
    auto [C, Cp] = hc::basis_constants(ws);
    if (hc::is_integer(C[1]) && C[1] >= 1 && C[1] <= 5) {
      auto d = hc::dim8_solver(C[1].get_num().get_si(), lmax);
      json sols = json::array();
      for (const auto& s : d.solutions) sols.push_back({{"l", hc::int_json(s.l)}, {"m", s.m.get_str()}});
      rep["dim8"] = {{"C1", d.C1}, {"feasible", d.feasible}, {"reason", d.reason}, {"solutions", sols}};
    }
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotropy weight systems of circle actions with isolated fixed points"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hc::kVersion);

  // enumerate
  ProfileArgs ep;
  std::string e_filter = "nonneg", e_dedup = "reversal", e_out;
  auto* en = app.add_subcommand("enumerate", "multigraphs compatible with a profile");
  add_profile_flags(en, ep);
  en->add_option("--filter", e_filter)->check(CLI::IsMember({"all", "nonneg", "positive"}));
  en->add_option("--dedup", e_dedup)->check(CLI::IsMember({"none", "reversal"}));
  en->add_option("--out", e_out, "output file (default stdout)");

  // classify
  ProfileArgs cp;
  std::string c_filter, c_dedup = "reversal", c_out, c_resume, c_cache = ".hamcircle-cache";
  long c_C = 0, c_D = 0, c_bound = 12;
  bool c_dim8 = false, c_no_unit = false, c_positive = false, c_no_cache = false, c_verbose = false;
  int c_jobs = 1;
  std::vector<int> c_graphs;
  long c_c1_blocks = 0;
  auto* cl = app.add_subcommand("classify", "search, solve and filter weight families");
  add_profile_flags(cl, cp);
  cl->add_option("--filter", c_filter)->check(CLI::IsMember({"all", "nonneg", "positive"}));
  cl->add_option("--dedup", c_dedup)->check(CLI::IsMember({"none", "reversal"}));
  cl->add_option("--C", c_C, "force a single divisor C");
  cl->add_option("--bound-D", c_D, "bounded mode with |m(e)| <= 2D");
  cl->add_flag("--dim8-strict", c_dim8, "restrict C1 to {1,5} when n = 4");
  cl->add_option("--jobs", c_jobs, "worker threads");
  cl->add_option("--resume", c_resume, "checkpoint file to resume from and update");
  cl->add_option("--out", c_out, "directory for families.json, audit.json, table.txt");
  cl->add_option("--witness-bound", c_bound, "largest entry of sampled null-space points");
  cl->add_option("--graphs", c_graphs, "only these graph ids");
  cl->add_option("--c1-blocks", c_c1_blocks, "sample only this many blocks of each C = 1 sweep");
  cl->add_flag("--no-unit-edges", c_no_unit, "do not pin the designated edges to m = C");
  cl->add_flag("--positive-parts", c_positive, "forbid zero labels on non-cycle edges");
  cl->add_option("--cache-dir", c_cache, "result cache directory");
  cl->add_flag("--no-cache", c_no_cache, "neither read nor write the cache");
  cl->add_flag("-v,--verbose", c_verbose, "progress on stderr");

  // verify
  std::string v_in, v_out;
  auto* ve = app.add_subcommand("verify", "structural and localization checks of a WeightSystem");
  ve->add_option("input", v_in, "WeightSystem JSON file")->required();
  ve->add_option("--out", v_out);

  // hattori
  std::string h_in, h_out;
  long h_k0 = 0, h_lmax = 60;
  auto* ha = app.add_subcommand("hattori", "levels, r_s sequence and the dimension 8 invariants");
  ha->add_option("input", h_in, "WeightSystem JSON file")->required();
  ha->add_option("--k0", h_k0);
  ha->add_option("--lmax", h_lmax);
  ha->add_option("--out", h_out);

  // fixture
  std::string f_name, f_out;
  std::vector<long> f_params;
  auto* fx = app.add_subcommand("fixture", "weights of a known example");
  fx->add_option("name", f_name)->required()->check(CLI::IsMember({"cp", "grassmannian", "v5", "v22", "s2xs2"}));
  fx->add_option("params", f_params, "xi vector, xi pair or (a,b)");
  fx->add_option("--out", f_out);

  // scan-c1eq1
  long s_lmax = 60;
  std::string s_out;
  auto* sc = app.add_subcommand("scan-c1eq1", "rational solutions of the C1 = 1 equation");
  sc->add_option("--lmax", s_lmax);
  sc->add_option("--out", s_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) {
      auto p = profile_of(ep);
      auto gs = hc::enumerate_multigraphs(p, parse_filter(e_filter),
                                          e_dedup == "none" ? hc::Dedup::None : hc::Dedup::Reversal);
      json arr = json::array();
      for (const auto& g : gs) arr.push_back(hc::to_json(g));
      emit(e_out, json({{"count", gs.size()}, {"graphs", arr}}).dump(1) + "\n");
    } else if (*cl) {
      auto p = profile_of(cp);
      hc::ClassifyConfig cfg;
      if (c_D > 0) {
        cfg.opts.mode = hc::SearchMode::Bounded;
        cfg.opts.D = c_D;
      }
      if (c_filter.empty()) c_filter = c_D > 0 ? "all" : "nonneg";
      cfg.filter = parse_filter(c_filter);
      cfg.dedup = c_dedup == "none" ? hc::Dedup::None : hc::Dedup::Reversal;
      if (c_C > 0) cfg.opts.divisor_C = c_C;
      cfg.opts.dim8_strict = c_dim8;
      cfg.opts.force_unit_edges = !c_no_unit;
      cfg.opts.positive_parts = c_positive;
      cfg.opts.witness_bound = c_bound;
      cfg.jobs = c_jobs;
      if (!c_graphs.empty()) cfg.graphs = c_graphs;
      if (c_c1_blocks > 0) cfg.c1_block_limit = c_c1_blocks;
      if (c_verbose) cfg.log = [](const std::string& s) { std::cerr << s << "\n"; };
      if (!c_resume.empty()) {
        cfg.checkpoint = c_resume;
      } else if (!c_no_cache && !cfg.graphs && !cfg.c1_block_limit) {
        fs::create_directories(c_cache);
        cfg.checkpoint = (fs::path(c_cache) / (hc::cache_key(p, cfg) + ".json")).string();
      }
      auto r = hc::classify(p, cfg);
      if (c_out.empty()) {
        std::cout << hc::table_text(r);
      } else {
        fs::create_directories(c_out);
        hc::write_atomically((fs::path(c_out) / "families.json").string(), hc::families_json(r).dump(1) + "\n");
        hc::write_atomically((fs::path(c_out) / "audit.json").string(), hc::audit_json(r).dump(1) + "\n");
        hc::write_atomically((fs::path(c_out) / "table.txt").string(), hc::table_text(r));
        std::cout << r.families.size() << " families, " << r.graph_classes << " graph classes\n";
      }
    } else if (*ve) {
      auto ws = hc::weight_system_from_json(hc::read_json_file(v_in));
      auto s = hc::weight_system_checks(ws);
      json rep = hc::to_json(hc::chern_battery(ws));
      rep["structural"] = {{"pairing", s.pairing}, {"lambda_counts", s.lambda_counts}, {"coprime", s.coprime},
                           {"gcd_failures", s.gcd_failures}};
      rep["all_pass"] = rep["all_pass"].get<bool>() && s.ok();
      emit(v_out, rep.dump(1) + "\n");
      return rep["all_pass"].get<bool>() ? 0 : 1;
    } else if (*ha) {
      auto ws = hc::weight_system_from_json(hc::read_json_file(h_in));
      std::optional<long> k0;
      if (h_k0 > 0) k0 = h_k0;
      emit(h_out, hattori_report(ws, k0, h_lmax).dump(1) + "\n");
    } else if (*fx) {
      emit(f_out, hc::to_json(hc::fixture(f_name, f_params)).dump() + "\n");
    } else if (*sc) {
      auto d = hc::dim8_solver(1, s_lmax);
      json sols = json::array();
      for (const auto& s : d.solutions) sols.push_back({{"l", hc::int_json(s.l)}, {"m", s.m.get_str()}});
      emit(s_out, json({{"C1", 1}, {"lmax", s_lmax}, {"solutions", sols}}).dump(1) + "\n");
    }
  } catch (const hc::Error& e) {
    std::cerr << "error (" << hc::to_string(e.kind) << "): " << e.what() << "\n";
    switch (e.kind) {
      case hc::ErrorKind::SchemaError:
        return kExitSchema;
      case hc::ErrorKind::BalanceViolation:
      case hc::ErrorKind::RangeViolation:
      case hc::ErrorKind::ProfileUnrealizable:
        return kExitInfeasible;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
