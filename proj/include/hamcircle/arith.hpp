#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hc {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorKind {
  BalanceViolation,
  RangeViolation,
  ProfileUnrealizable,
  PairingMismatch,
  NonIntegralSum,
  DegenerateWeights,
  NotLaurent,
  ConsistencyFailure,
  ShapePrecondition,
  Precondition,
  IneffectiveParameters,
  SchemaError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::BalanceViolation: return "BalanceViolation";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::ProfileUnrealizable: return "ProfileUnrealizable";
    case ErrorKind::PairingMismatch: return "PairingMismatch";
    case ErrorKind::NonIntegralSum: return "NonIntegralSum";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::NotLaurent: return "NotLaurent";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::ShapePrecondition: return "ShapePrecondition";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::IneffectiveParameters: return "IneffectiveParameters";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& what)
      : std::runtime_error(std::string(to_string(k)) + ": " + what), kind(k) {}
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// a / b in canonical form (mpq arithmetic requires it).
inline Rat frac(const Int& a, const Int& b) {
  if (b == 0) throw Error(ErrorKind::Precondition, "zero denominator");
  Rat q(a, b);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Scale a rational vector to coprime integers, keeping direction.
inline std::vector<Int> primitive(const std::vector<Rat>& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  std::vector<Int> out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    Int y = x.get_num() * (den / x.get_den());
    g = gcd(g, y);
    out.push_back(y);
  }
  if (g > 1)
    for (auto& y : out) y /= g;
  return out;
}

inline Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

inline std::int64_t to_i64(const Int& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::Precondition, "integer out of 64-bit range");
  return z.get_si();
}

inline bool is_perfect_square(const Int& z) {
  return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& z) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

inline std::string str(const Rat& q) { return q.get_str(); }
inline std::string str(const Int& z) { return z.get_str(); }

}  // namespace hc
