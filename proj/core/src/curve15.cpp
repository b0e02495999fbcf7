#include "qmahler/curve15.hpp"

#include <cmath>
#include <functional>

#include "qmahler/dual.hpp"
#include "qmahler/errors.hpp"
#include "qmahler/quad.hpp"

namespace qm::hfun {

namespace {

const Real kS3 = std::sqrt(Real(2));           // s at t = 3
const Real kSigma3 = 1 / std::sqrt(Real(3));   // sigma at t = 3

// Logs of x, x xbar, x/xbar and the three angle derivatives with respect to
// the chart parameter.
struct Sample {
  Real log_x;
  Real log_xx;
  Real log_ratio;
  Real dphi;
  Real dpsi1;
  Real dpsi2;
};

// t = 1 + s^2, sqrt(-3+t^2+2t^3) = s sqrt(2t^2+3t+3).
Sample sample_s(Real s_value) {
  const Dual s = Dual::variable(s_value);
  const Dual t = 1 + s * s;
  const Dual sqrt_r = s * sqrt(2 * t * t + 3 * t + 3);
  const Real tv = t.v;
  const Real big = tv * tv + 3 * tv + kSqrt3 * sqrt_r.v;  // t^2 + 3t + sqrt(3r)
  const Real log_t1 = 2 * std::log(s_value);
  Sample out{};
  out.log_x = 2 * log_t1 - std::log(big);
  out.log_xx = 4 * log_t1 - 2 * std::log(tv * tv + 3);
  out.log_ratio = 2 * std::log((tv * tv + 3) / big);
  out.dphi = atan_derivative(kSqrt3 * (1 + t) * (3 - 6 * t - t * t - 2 * kSqrt3 * sqrt_r),
                             (3 - t) * (3 + t * t));
  out.dpsi1 = atan_derivative(t, Dual(kSqrt3));
  out.dpsi2 = atan_derivative((3 - t) * (3 + 3 * t + 2 * t * t), 3 * (1 + t) * sqrt_r);
  return out;
}

// t = 1/w, w = sigma^2; numerators and denominators rescaled by w^3 > 0.
Sample sample_sigma(Real sigma_value) {
  const Dual sg = Dual::variable(sigma_value);
  const Dual w = sg * sg;
  const Dual q = sqrt(2 + w - 3 * w * w * w);
  const Real wv = w.v;
  const Real big = 1 + 3 * wv + kSqrt3 * sigma_value * q.v;
  Sample out{};
  out.log_x = 2 * std::log1p(-wv) - std::log(big);
  out.log_xx = 4 * std::log1p(-wv) - 2 * std::log1p(3 * wv * wv);
  out.log_ratio = 2 * std::log((1 + 3 * wv * wv) / big);
  out.dphi = atan_derivative(kSqrt3 * (w + 1) * (3 * w * w - 6 * w - 1 - 2 * kSqrt3 * q * sg),
                             (3 * w - 1) * (3 * w * w + 1));
  out.dpsi1 = atan_derivative(Dual(1), kSqrt3 * w);
  out.dpsi2 = atan_derivative((3 * w - 1) * (3 * w * w + 3 * w + 2), 3 * (w + 1) * q * sg);
  return out;
}

// int_1^inf over t of field(sample) in both charts; the sigma chart runs
// against t, hence the sign.
Real integrate_t(const std::function<Real(const Sample&)>& field, Real tol) {
  const auto lower = quad::integrate_de(
      quad::EndpointIntegrand([&](Real, Real s, Real) { return field(sample_s(s)); }), 0, kS3,
      tol / 2);
  const auto upper = quad::integrate_de(
      quad::EndpointIntegrand([&](Real, Real sigma, Real) { return field(sample_sigma(sigma)); }),
      0, kSigma3, tol / 2);
  return lower.value - upper.value;
}

}  // namespace

CurvePoint15 curve_point(Real t) {
  if (!(t >= 1)) throw DomainError("curve point: need t >= 1");
  const Real r = -3 + t * t + 2 * t * t * t;
  const Real sr = kSqrt3 * std::sqrt(r);
  const Real d = (3 + t * t) * (3 + t * t);
  CurvePoint15 p;
  p.t = t;
  p.x = (1 - t) * (1 - t) * (3 * t + t * t - sr) / d;
  p.xbar = (1 - t) * (1 - t) * (3 * t + t * t + sr) / d;
  p.y = (1 + t) * (3 - 6 * t - t * t - 2 * sr) / ((3 - t) * (3 + t * t));
  return p;
}

Real curve_quartic_residual(Real x, Real y) {
  Real total = 0;
  Real yj = 1;
  for (const auto& row : kQuartic15) {
    Real poly = 0;
    for (auto it = row.rbegin(); it != row.rend(); ++it) poly = poly * x + *it;
    total += poly * yj;
    yj *= y;
  }
  return total;
}

Real curve_quartic_relative_residual(Real x, Real y) {
  Real scale = 0;
  Real yj = 1;
  for (const auto& row : kQuartic15) {
    Real xi = 1;
    for (int c : row) {
      scale += std::abs(c * xi * yj);
      xi *= std::abs(x);
    }
    yj *= std::abs(y);
  }
  return curve_quartic_residual(x, y) / scale;
}

Real dsplit_residual(Real t_value) {
  if (!(t_value > 1)) throw DomainError("dsplit_residual: need t > 1");
  const Dual t = Dual::variable(t_value);
  const Dual sqrt_r = sqrt(-3 + t * t + 2 * t * t * t);
  const Real dphi = atan_derivative(kSqrt3 * (1 + t) * (3 - 6 * t - t * t - 2 * kSqrt3 * sqrt_r),
                                    (3 - t) * (3 + t * t));
  const Real dpsi1 = atan_derivative(t, Dual(kSqrt3));
  const Real dpsi2 = atan_derivative((3 - t) * (3 + 3 * t + 2 * t * t), 3 * (1 + t) * sqrt_r);
  return dphi - 2 * dpsi1 - dpsi2;
}

Real FourPieces::assembled() const { return 4 * kPi * (P1 + P2) + 2 * kPi * (P3 + P4); }

FourPieces four_piece_split(Real tol) {
  FourPieces p;
  p.P1 = integrate_t([](const Sample& s) { return s.log_xx * s.dpsi1; }, tol);
  p.P2 = integrate_t([](const Sample& s) { return s.log_ratio * s.dpsi1; }, tol);
  p.P3 = integrate_t([](const Sample& s) { return s.log_ratio * s.dpsi2; }, tol);
  p.P4 = integrate_t([](const Sample& s) { return s.log_xx * s.dpsi2; }, tol);
  return p;
}

Real conductor15_integral(Real tol) {
  return 4 * kPi * integrate_t([](const Sample& s) { return s.log_x * s.dphi; }, tol / (4 * kPi));
}

}  // namespace qm::hfun
