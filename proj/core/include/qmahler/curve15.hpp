#pragma once

// The genus-1 curve behind the degree-5 case: the rational parametrization
// t in [1, inf) of (x, y), the quartic relation between x and y, and the
// integrals over t built from log x, log(x xbar), log(x / xbar) against
//   Phi  = atan(sqrt3 * y),
//   psi1 = atan(t / sqrt3),
//   psi2 = atan((3-t)(3+3t+2t^2) / (3(1+t) sqrt(-3+t^2+2t^3))).
//
// Integrals over t run in two charts: t = 1 + s^2 for t in [1, 3] and
// t = 1/sigma^2 for t in [3, inf). Both remove the square-root behaviour of
// sqrt(-3+t^2+2t^3) at t = 1 and of the tail at infinity. Differentials are
// taken by forward-mode AD through d atan(N/D) = (N'D - N D') / (N^2 + D^2),
// which is continuous where D changes sign (t = 3 for Phi and psi2).

#include <array>

#include "qmahler/real.hpp"

namespace qm::hfun {

struct CurvePoint15 {
  Real t = 1;
  Real x = 0;
  Real xbar = 0;
  Real y = 0;
};

// Throws DomainError for t < 1.
CurvePoint15 curve_point(Real t);

// Coefficient of x^i y^j is kQuartic15[j][i].
inline constexpr std::array<std::array<int, 5>, 5> kQuartic15 = {{
    {1, -14, -5, -6, 9},
    {4, 20, -12, 0, 0},
    {6, -44, -18, -36, 54},
    {4, 60, -36, 0, 0},
    {1, -6, -9, -54, 81},
}};

Real curve_quartic_residual(Real x, Real y);
// The residual divided by sum |c_ij x^i y^j|, for points where y is large.
Real curve_quartic_relative_residual(Real x, Real y);

// Phi'(t) - 2 psi1'(t) - psi2'(t); t > 1.
Real dsplit_residual(Real t);

// Integrals over t in [1, inf):
//   P1 = int log(x xbar) dpsi1    P2 = int log(x/xbar) dpsi1
//   P3 = int log(x/xbar) dpsi2    P4 = int log(x xbar) dpsi2
struct FourPieces {
  Real P1 = 0;
  Real P2 = 0;
  Real P3 = 0;
  Real P4 = 0;

  // 4 pi (P1 + P2) + 2 pi (P3 + P4), the full log x dPhi integral.
  Real assembled() const;
};

FourPieces four_piece_split(Real tol = Real(1e-11));

// 4 pi int_1^inf log x dPhi.
Real conductor15_integral(Real tol = Real(1e-11));

}  // namespace qm::hfun
