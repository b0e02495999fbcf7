#pragma once

// H(x) = (1/3) int_0^1 b(q^x) c(q) log q dq/q by two independent routes,
// the telescoping integral, the signature-3 parameters (alpha, beta, u, v, R)
// with the tabulated degree-x relations, and the elementary right-hand side
// of the H-combination for degrees 2 and 5.

#include "qmahler/curve15.hpp"
#include "qmahler/qseries.hpp"
#include "qmahler/real.hpp"

namespace qm::hfun {

using qseries::Exponent;

// -(4 pi^2 / 3) int_0^inf t b(e^{-2 pi x t}) c(e^{-2 pi t}) dt.
Real H_q(Real x, Real tol = Real(1e-11));
inline Real H_q(Exponent x, Real tol = Real(1e-11)) {
  return H_q(static_cast<Real>(x.numerator()) / static_cast<Real>(x.denominator()), tol);
}

// x H(x/3) from the alpha-integral, alpha = c^3/a^3 at q = e^{-2 pi s} and
// beta the same at q^x. The derivative along s is a central difference with
// one Richardson step, so this route is good to about 1e-8.
Real H_alpha(Real x, Real tol = Real(1e-9));

// int_0^1 (r^2 c(q^r) c(q^{rj}) - c(q) c(q^j)) log q dq/q; expected (4 pi^2/(3j)) log r.
Real telescope_integral(Real r, Real j, Real tol = Real(1e-11));

struct SignatureParams {
  Real q = 0;
  Real x = 0;
  Real alpha = 0;
  Real beta = 0;
  Real u = 0;
  Real v = 0;
  Real R = 0;
};

SignatureParams signature_params(Real q, Real x);

// The tabulated u-v relation of degree 2, 5, 8 or 11 at p; zero on the curve.
Real table_residual(const SignatureParams& p, int degree);

// R^3 - 3vR - v^3 - (1 - u^3).
Real cubic_residual(const SignatureParams& p);

// x H(x/3) + (1/x) H(1/(3x)) + 2 H(1/3) through H_q.
Real H_combination(Real x, Real tol = Real(1e-11));

// 4 pi int_{v in [0,1]} log((1-R+v)/u) d atan(sqrt3 (1+R)/(1-R-2v)) for x in {2, 5}.
Real rhs_main_theorem(int x, Real tol = Real(1e-11));

// The degree-2 integrand data at parameter t >= 1, in the general (R, v, u)
// form and in the reduced form log(1/(1-t+t^2)), atan(sqrt3 t/(2-t)).
struct Degree2Point {
  Real R = 0;
  Real v = 0;
  Real u = 0;
  Real log_general = 0;
  Real log_reduced = 0;
  Real datan_general = 0;  // d/dt
  Real datan_reduced = 0;
  Real cubic_residual = 0;
};

Degree2Point degree2_point(Real t);

}  // namespace qm::hfun
