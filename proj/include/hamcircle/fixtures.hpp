#pragma once

#include <string>
#include <vector>

#include "core.hpp"

namespace hc {

namespace detail {

inline WeightSystem effective(std::vector<std::vector<Int>> w, const std::string& what) {
  for (size_t i = 0; i < w.size(); ++i) {
    Int g = 0;
    for (const auto& x : w[i]) g = gcd(g, x);
    if (g != 1)
      throw Error(ErrorKind::IneffectiveParameters,
                  what + ": weights at point " + std::to_string(i) + " share the factor " + g.get_str());
  }
  return make_weight_system(std::move(w));
}

inline void strictly_decreasing(const std::vector<long>& xi, const std::string& what) {
  for (size_t i = 0; i + 1 < xi.size(); ++i)
    if (xi[i] <= xi[i + 1])
      throw Error(ErrorKind::IneffectiveParameters, what + ": xi must be strictly decreasing");
}

}  // namespace detail

// Weights {xi_i - xi_j : j != i} at P_i.
inline WeightSystem cp_fixture(const std::vector<long>& xi) {
  if (xi.size() < 2) throw Error(ErrorKind::IneffectiveParameters, "cp: need at least two entries");
  detail::strictly_decreasing(xi, "cp");
  std::vector<std::vector<Int>> w(xi.size());
  for (size_t i = 0; i < xi.size(); ++i)
    for (size_t j = 0; j < xi.size(); ++j)
      if (j != i) w[i].emplace_back(xi[i] - xi[j]);
  return detail::effective(std::move(w), "cp");
}

// Oriented 2-planes in R^{2k+1}, k = xi.size(): points y_0..y_{2k-1} with
// y_i = -xi_i and y_{2k-1-i} = xi_i, weights {y_j - y_i : j != i, 2k-1-i} and -y_i.
inline WeightSystem grassmannian_fixture(const std::vector<long>& xi) {
  if (xi.size() < 2) throw Error(ErrorKind::IneffectiveParameters, "grassmannian: need at least two entries");
  detail::strictly_decreasing(xi, "grassmannian");
  if (xi.back() <= 0) throw Error(ErrorKind::IneffectiveParameters, "grassmannian: entries must be positive");
  int k = static_cast<int>(xi.size()), P = 2 * k;
  std::vector<long> y(P);
  for (int i = 0; i < k; ++i) {
    y[i] = -xi[i];
    y[P - 1 - i] = xi[i];
  }
  std::vector<std::vector<Int>> w(P);
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j)
      if (j != i && j != P - 1 - i) w[i].emplace_back(y[j] - y[i]);
    w[i].emplace_back(-y[i]);
  }
  return detail::effective(std::move(w), "grassmannian");
}

inline WeightSystem v5_fixture() { return ws_from({{1, 2, 3}, {-1, 1, 4}, {-1, -4, 1}, {-1, -2, -3}}); }

inline WeightSystem v22_fixture() { return ws_from({{1, 2, 3}, {-1, 1, 5}, {-1, -5, 1}, {-1, -2, -3}}); }

inline WeightSystem s2xs2_fixture(long a, long b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::IneffectiveParameters, "s2xs2: a and b must be positive");
  std::vector<std::vector<Int>> w{{Int(a), Int(b)}, {Int(-b), Int(a)}, {Int(-a), Int(b)}, {Int(-a), Int(-b)}};
  return detail::effective(std::move(w), "s2xs2");
}

inline WeightSystem fixture(const std::string& name, const std::vector<long>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw Error(ErrorKind::Precondition, name + " expects " + std::to_string(k) + " parameters");
  };
  if (name == "cp") return cp_fixture(params);
  if (name == "grassmannian") {
    need(2);
    return grassmannian_fixture(params);
  }
  if (name == "v5") {
    need(0);
    return v5_fixture();
  }
  if (name == "v22") {
    need(0);
    return v22_fixture();
  }
  if (name == "s2xs2") {
    need(2);
    return s2xs2_fixture(params[0], params[1]);
  }
  throw Error(ErrorKind::Precondition, "unknown fixture " + name);
}

}  // namespace hc
