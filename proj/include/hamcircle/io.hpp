#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hattori.hpp"
#include "localization.hpp"

namespace hc {

using json = nlohmann::json;

inline json int_json(const Int& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw Error(ErrorKind::SchemaError, "expected an integer, got " + j.dump());
}

inline json to_json(const WeightSystem& ws) {
  json pts = json::array();
  for (int i = 0; i < ws.points(); ++i) {
    json w = json::array();
    for (const auto& x : ws.weights[i]) w.push_back(int_json(x));
    pts.push_back({{"lambda", ws.profile.lambdas[i]}, {"weights", w}});
  }
  return {{"n", ws.n()}, {"points", pts}};
}

inline WeightSystem weight_system_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("points"))
      throw Error(ErrorKind::SchemaError, "WeightSystem needs \"n\" and \"points\"");
    int n = j.at("n").get<int>();
    std::vector<std::vector<Int>> w;
    std::vector<int> lambdas;
    for (const auto& p : j.at("points")) {
      w.emplace_back();
      for (const auto& x : p.at("weights")) w.back().push_back(int_from_json(x));
      if (static_cast<int>(w.back().size()) != n)
        throw Error(ErrorKind::SchemaError, "point does not carry n weights");
      lambdas.push_back(p.at("lambda").get<int>());
    }
    WeightSystem ws = make_weight_system(std::move(w), lambdas);
    for (int i = 0; i < ws.points(); ++i) {
      long neg = std::count_if(ws.weights[i].begin(), ws.weights[i].end(), [](const Int& x) { return x < 0; });
      if (neg != ws.profile.lambdas[i])
        throw Error(ErrorKind::SchemaError, "lambda of point " + std::to_string(i) + " disagrees with its weights");
    }
    return ws;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, e.what());
  }
}

inline json to_json(const Multigraph& g) {
  json e = json::array();
  for (const auto& [i, j] : g.edges) e.push_back({i, j});
  return {{"n", g.profile.n}, {"lambdas", g.profile.lambdas}, {"edges", e}};
}

inline Multigraph multigraph_from_json(const json& j) {
  try {
    auto p = validate_profile(j.at("n").get<int>(), j.at("lambdas").get<std::vector<int>>());
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::SchemaError, "edge must be [from, to]");
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= p.points() || b >= p.points())
        throw Error(ErrorKind::SchemaError, "edge endpoint out of range");
      edges.emplace_back(a, b);
    }
    return make_multigraph(p, std::move(edges));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, e.what());
  }
}

inline json to_json(const ChernReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
  json Ci = json::array(), Cpi = json::array();
  for (const auto& x : r.Ci) Ci.push_back(x.get_str());
  for (const auto& x : r.Cpi) Cpi.push_back(x.get_str());
  return {{"all_pass", r.all_pass()},
          {"c_n", r.c_n.get_str()},
          {"c1_cn1", r.c1_cn1.get_str()},
          {"expected_c1_cn1", int_json(r.expected_c1_cn1)},
          {"chi_y", r.chi_y},
          {"C", Ci},
          {"C_prime", Cpi},
          {"checks", checks}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, path + ": " + e.what());
  }
}

// Write to a sibling temporary file, then rename over the target.
inline void write_atomically(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hc
