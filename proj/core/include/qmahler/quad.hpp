#pragma once

// One-dimensional quadrature engines.
//
//   integrate          globally adaptive Gauss-Kronrod (G15/K31) bisection
//   integrate_de       tanh-sinh with level doubling, for endpoint singularities
//   integrate_from     [a, inf) via t = a + s/(1-s) and tanh-sinh
//   integrate_halfline [0, inf) split at 1
//
// Engines are stateless and deterministic. Interior kinks or sign changes are
// the caller's business: split the interval there.

#include <functional>

#include "qmahler/real.hpp"

namespace qm::quad {

inline constexpr Real kDefaultTol = Real(1e-11);
inline constexpr int kMaxDepth = 60;
inline constexpr long kMaxEvaluations = 10'000'000;

struct Quadrature {
  Real value = 0;
  Real err_estimate = 0;
  long evaluations = 0;

  Quadrature& operator+=(const Quadrature& o) {
    value += o.value;
    err_estimate += o.err_estimate;
    evaluations += o.evaluations;
    return *this;
  }
};

using Integrand = std::function<Real(Real)>;

// f(x, x - a, b - x), with whichever distance is small computed exactly.
// Integrands with x^{-1/2}-type behaviour at a nonzero endpoint need the
// exact distance to stay accurate.
using EndpointIntegrand = std::function<Real(Real, Real, Real)>;

Quadrature integrate(const Integrand& f, Real a, Real b, Real tol = kDefaultTol);

Quadrature integrate_de(const Integrand& f, Real a, Real b, Real tol = kDefaultTol);
Quadrature integrate_de(const EndpointIntegrand& f, Real a, Real b, Real tol = kDefaultTol);

Quadrature integrate_from(const Integrand& f, Real a, Real tol = kDefaultTol);
Quadrature integrate_halfline(const Integrand& f, Real tol = kDefaultTol);

}  // namespace qm::quad
