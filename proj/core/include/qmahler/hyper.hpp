#pragma once

// Generalized hypergeometric series and the closed forms built on them:
// the complete elliptic integral K, Dirichlet L(chi_{-3}, s), the Mahler
// measure family m(alpha) = m(alpha + X + 1/X + Y + 1/Y), and the integral
// I(y) in three equivalent forms.

#include <vector>

#include "qmahler/real.hpp"

namespace qm::hyper {

struct HyperParams {
  std::vector<Real> upper;
  std::vector<Real> lower;
  Real z = 0;
};

// pFq(upper; lower; z) for |z| < 1, or z = 1 when sum(lower) - sum(upper) > 0.
// At z = 1 the partial sums are Richardson-extrapolated in the known
// algebraic tail exponents; accuracy there is about 1e-12.
// Throws DomainError on divergent or ill-posed parameters, NonConvergence
// past 10^6 terms.
Real pfq(const HyperParams& p, Real tol = Real(1e-16));

// K(z) = (pi/2) 2F1(1/2, 1/2; 1; z^2), 0 <= z < 1.
Real ellK(Real z);

// L(chi_{-3}, s) for s in {1, 2}.
Real dirichlet_L3(int s);

// m(alpha) for alpha > 0; the two hypergeometric branches are also exposed.
Real m_alpha(Real alpha);
Real m_alpha_3f2(Real alpha);  // 0 < alpha <= 4
Real m_alpha_4f3(Real alpha);  // alpha >= 4

// I(y) = -(2/pi) int_0^1 (y-1+2u) log u / sqrt(u(1-u)(y-1+u)(y+u)) du, y >= 1.
Real I_integral(Real y, Real tol = Real(1e-12));
Real I_hyper(Real y);
Real I_mahler(Real y);

}  // namespace qm::hyper
