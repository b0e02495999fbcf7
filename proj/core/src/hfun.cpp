#include "qmahler/hfun.hpp"

#include <algorithm>
#include <cmath>

#include "qmahler/dual.hpp"
#include "qmahler/errors.hpp"
#include "qmahler/eta_num.hpp"
#include "qmahler/quad.hpp"

namespace qm::hfun {

namespace {

using qseries::log_b;
using qseries::log_c;

constexpr Real kTwoPi = 2 * kPi;
constexpr Real kFourPi2 = 4 * kPi * kPi;

// Below this t the telescoping integrand is evaluated through the modular
// relation c(e^{-2 pi t}) = b(e^{-2 pi / (3t)}) / (sqrt3 t).
constexpr Real kTelescopeSwitch = Real(0.5);

// Split point between the finite-interval and the mapped half-line integrals.
constexpr Real kHalflineSplit = Real(0.5);

Real halfline(const quad::Integrand& g, Real tol) {
  return quad::integrate(g, 0, kHalflineSplit, tol / 2).value +
         quad::integrate_from(g, kHalflineSplit, tol / 2).value;
}

Real softplus(Real x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// log(alpha / (1 - alpha)) = 3 log(c/b) at q = e^{-2 pi s}.
Real alpha_logit(Real s) { return 3 * (log_c(kTwoPi * s) - log_b(kTwoPi * s)); }

Real alpha_logit_derivative(Real s) {
  const Real h = std::min(Real(1e-3), s / 4);
  auto central = [s](Real d) { return (alpha_logit(s + d) - alpha_logit(s - d)) / (2 * d); };
  return (4 * central(h / 2) - central(h)) / 3;
}

void require_positive(Real x, const char* what) {
  if (!(x > 0)) throw DomainError(std::string(what) + ": argument must be positive");
}

}  // namespace

Real H_q(Real x, Real tol) {
  require_positive(x, "H_q");
  const auto g = [x](Real t) { return t * std::exp(log_b(kTwoPi * x * t) + log_c(kTwoPi * t)); };
  const Real scale = kFourPi2 / 3;
  return -scale * halfline(g, tol / scale);
}

Real H_alpha(Real x, Real tol) {
  require_positive(x, "H_alpha");
  const auto g = [x](Real s) {
    const Real sp_a = softplus(alpha_logit(s));  // -log(1 - alpha)
    const Real cbrt_1ma = std::exp(-sp_a / 3);
    const Real one_minus_cbrt = -std::expm1(-sp_a / 3);
    const Real ell_b = alpha_logit(x * s);
    const Real sp_b = softplus(ell_b);
    const Real log_beta = ell_b - sp_b;
    // log(1 - (1-beta)^{1/3}); for tiny beta it is log(beta/3) to working precision.
    const Real log_gap = ell_b < -40 ? ell_b - std::log(Real(3)) : std::log(-std::expm1(-sp_b / 3));
    const Real log_term = log_gap - log_beta / 3;
    return cbrt_1ma * one_minus_cbrt * log_term * -alpha_logit_derivative(s);
  };
  const Real scale = kTwoPi / kSqrt3;
  return scale * halfline(g, tol / scale);
}

Real telescope_integral(Real r, Real j, Real tol) {
  require_positive(r, "telescope_integral");
  require_positive(j, "telescope_integral");
  // log b(e^{-2 pi / (3 tau)})
  const auto log_B = [](Real tau) { return log_b(kTwoPi / (3 * tau)); };
  const auto g = [r, j, &log_B](Real t) -> Real {
    if (t < kTelescopeSwitch) {
      const Real diff = std::expm1(log_B(r * t) + log_B(r * j * t)) - std::expm1(log_B(t) + log_B(j * t));
      return -kFourPi2 * diff / (3 * j * t);
    }
    const Real scaled = r * r * std::exp(log_c(kTwoPi * r * t) + log_c(kTwoPi * r * j * t));
    const Real plain = std::exp(log_c(kTwoPi * t) + log_c(kTwoPi * j * t));
    return -kFourPi2 * t * (scaled - plain);
  };
  return quad::integrate(g, 0, kTelescopeSwitch, tol / 2).value +
         quad::integrate_from(g, kTelescopeSwitch, tol / 2).value;
}

SignatureParams signature_params(Real q, Real x) {
  if (!(q > 0 && q < 1)) throw DomainError("signature_params: need 0 < q < 1");
  require_positive(x, "signature_params");
  const Real h = -std::log(q);
  const auto logit = [](Real hh) { return 3 * (log_c(hh) - log_b(hh)); };
  const Real la = logit(h);
  const Real lb = logit(x * h);
  SignatureParams p;
  p.q = q;
  p.x = x;
  p.alpha = 1 / (1 + std::exp(-la));
  p.beta = 1 / (1 + std::exp(-lb));
  const Real one_ma = 1 / (1 + std::exp(la));
  const Real one_mb = 1 / (1 + std::exp(lb));
  p.u = std::cbrt(p.alpha * p.beta);
  p.v = std::cbrt(one_ma * one_mb);
  p.R = std::cbrt(one_ma) + std::cbrt(one_mb);
  return p;
}

Real table_residual(const SignatureParams& p, int degree) {
  const Real u = p.u;
  const Real v = p.v;
  const Real s = u + v - 1;
  switch (degree) {
    case 2:
      return s;
    case 5:
      return s * s - 9 * u * v;
    case 8:
      return s * s * s * s + 9 * u * v * (4 * u + 4 * v + 5) * s - 162 * u * u * v * v;
    case 11: {
      const Real ruv = std::sqrt(u * v);
      return u + v + 6 * ruv + 3 * kSqrt3 * std::sqrt(ruv) * (std::sqrt(u) + std::sqrt(v)) - 1;
    }
    default:
      throw DomainError("table_residual: degree must be 2, 5, 8 or 11");
  }
}

Real cubic_residual(const SignatureParams& p) {
  return p.R * p.R * p.R - 3 * p.v * p.R - p.v * p.v * p.v - (1 - p.u * p.u * p.u);
}

Real H_combination(Real x, Real tol) {
  require_positive(x, "H_combination");
  return x * H_q(x / 3, tol) + H_q(1 / (3 * x), tol) / x + 2 * H_q(Real(1) / 3, tol);
}

Real rhs_main_theorem(int x, Real tol) {
  if (x == 5) return -conductor15_integral(tol);
  if (x != 2) throw DomainError("rhs_main_theorem: only x = 2 and x = 5 are supported");
  // t in [1, 2] directly; t in [2, inf) through t = 1/w, angle atan(sqrt3 / (2w - 1)).
  const auto near = [](Real tv) {
    const Dual t = Dual::variable(tv);
    return -std::log(1 - tv + tv * tv) * atan_derivative(kSqrt3 * t, 2 - t);
  };
  const auto far = [](Real wv) {
    const Dual w = Dual::variable(wv);
    const Real log_term = 2 * std::log(wv) - std::log(1 - wv + wv * wv);
    return log_term * atan_derivative(Dual(kSqrt3), 2 * w - 1);
  };
  const Real inner_tol = tol / (8 * kPi);
  const Real a = quad::integrate(near, 1, 2, inner_tol).value;
  const Real b = quad::integrate_de(
                     quad::EndpointIntegrand([&](Real, Real w, Real) { return far(w); }), 0, 0.5,
                     inner_tol)
                     .value;
  return 4 * kPi * (a - b);
}

Degree2Point degree2_point(Real tv) {
  if (!(tv >= 1)) throw DomainError("degree2_point: need t >= 1");
  const Dual t = Dual::variable(tv);
  const Dual den = t * t * t + 2;
  const Dual R = (t - 1) * (2 * t * t - t + 2) / den;
  const Dual v = (t - 1) * (t - 1) * (t - 1) / den;
  const Dual u = 1 - v;
  Degree2Point p;
  p.R = R.v;
  p.v = v.v;
  p.u = u.v;
  p.log_general = std::log((1 - R.v + v.v) / u.v);
  p.log_reduced = -std::log(1 - tv + tv * tv);
  p.datan_general = atan_derivative(kSqrt3 * (1 + R), 1 - R - 2 * v);
  p.datan_reduced = atan_derivative(kSqrt3 * t, 2 - t);
  p.cubic_residual = p.R * p.R * p.R - 3 * p.v * p.R - p.v * p.v * p.v - (1 - p.u * p.u * p.u);
  return p;
}

}  // namespace qm::hfun
