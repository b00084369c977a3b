#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace wdp {

using Int = mpz_class;
using Rat = mpq_class;

/// Arithmetic or consistency failure; the message names the violated contract.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse "num", "-num" or "num/den" with nonzero denominator. Exact; no
/// floating point anywhere in the pipeline.
Rat parse_rat(const std::string& s);

/// Canonical text form: "num" or "num/den" with positive denominator.
std::string rat_str(const Rat& q);

inline std::string int_str(const Int& n) { return n.get_str(); }

/// Homogeneous rational triple (a point of P^2 or a line's coefficients).
struct Vec3q {
  std::array<Rat, 3> v{};

  Rat& operator[](size_t i) { return v[i]; }
  const Rat& operator[](size_t i) const { return v[i]; }
  bool is_zero() const { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
  bool operator==(const Vec3q&) const = default;
};

inline Vec3q vec3(Rat a, Rat b, Rat c) { return Vec3q{{std::move(a), std::move(b), std::move(c)}}; }

/// Scale so the first nonzero coordinate is 1. Rejects the zero triple.
Vec3q normalize_homogeneous(const Vec3q& p);

/// <a, b> = a1 b1 + a2 b2 + a3 b3 (a line evaluated at a point).
Rat dot(const Vec3q& a, const Vec3q& b);

/// True when the triples agree as projective points/lines.
bool proportional(const Vec3q& a, const Vec3q& b);

/// Line through two distinct points (cross product).
Vec3q line_through(const Vec3q& p, const Vec3q& q);

}  // namespace wdp
