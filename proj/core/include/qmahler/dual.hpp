#pragma once

// Forward-mode dual numbers v + d*eps, eps^2 = 0.

#include <cmath>

#include "qmahler/real.hpp"

namespace qm {

struct Dual {
  Real v = 0;
  Real d = 0;

  constexpr Dual() = default;
  constexpr Dual(Real value, Real deriv = 0) : v(value), d(deriv) {}  // NOLINT(google-explicit-constructor)

  static constexpr Dual variable(Real value) { return {value, 1}; }

  friend constexpr Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
  friend constexpr Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
  friend constexpr Dual operator-(Dual a) { return {-a.v, -a.d}; }
  friend constexpr Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
  friend constexpr Dual operator/(Dual a, Dual b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
  }
  Dual& operator+=(Dual o) { return *this = *this + o; }
  Dual& operator-=(Dual o) { return *this = *this - o; }
  Dual& operator*=(Dual o) { return *this = *this * o; }
  Dual& operator/=(Dual o) { return *this = *this / o; }
};

inline Dual sqrt(Dual a) {
  const Real s = std::sqrt(a.v);
  return {s, a.d / (2 * s)};
}
inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }
inline Dual exp(Dual a) {
  const Real e = std::exp(a.v);
  return {e, a.d * e};
}

inline Real value_of(Real x) { return x; }
inline Real value_of(Dual x) { return x.v; }

// d/dp atan(N/D) for N, D carrying derivatives in p; continuous across D = 0.
inline Real atan_derivative(Dual n, Dual d) { return (n.d * d.v - n.v * d.d) / (n.v * n.v + d.v * d.v); }

}  // namespace qm
