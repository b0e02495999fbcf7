#include "qmahler/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include "qmahler/errors.hpp"
#include "qmahler/quad.hpp"

namespace qm::mahler {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z, Complex* derivative) {
  Complex p = 0;
  Complex dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  if (derivative != nullptr) *derivative = dp;
  return p;
}

Real log_plus(Real r) { return r > 1 ? std::log(r) : Real(0); }

// Grid used to locate theta where a slice root crosses the unit circle.
constexpr int kCrossingGrid = 256;

// Number of slice roots outside the unit circle, or -1 when the slice
// vanishes identically (P has a factor depending on X only).
int roots_outside(const LaurentPoly2& Q, Real theta) {
  try {
    const auto s = jensen_slice(Q, theta);
    return static_cast<int>(std::count_if(s.roots.begin(), s.roots.end(), [](Complex r) { return std::abs(r) > 1; }));
  } catch (const DomainError&) {
    return -1;
  }
}

// Appends every theta in (lo, hi) where the outside-root count steps, found
// by recursive bisection so that several crossings in one cell all show up.
void bisect_crossings(const LaurentPoly2& Q, Real lo, Real hi, int c_lo, int c_hi, std::vector<Real>& out) {
  if (c_lo == c_hi) return;
  if (hi - lo <= 1e-15) {
    out.push_back((lo + hi) / 2);
    return;
  }
  const Real mid = (lo + hi) / 2;
  const int c_mid = roots_outside(Q, mid);
  if (c_mid < 0) {
    out.push_back(mid);
    return;
  }
  bisect_crossings(Q, lo, mid, c_lo, c_mid, out);
  bisect_crossings(Q, mid, hi, c_mid, c_hi, out);
}

// Breakpoints in [0, 1] at which the number of slice roots outside the circle
// changes. The slice measure has a kink at each one, which adaptive
// Gauss-Kronrod can miss; integrating between them keeps every panel smooth.
std::vector<Real> crossing_breaks(const LaurentPoly2& Q) {
  std::vector<Real> breaks{0};
  int prev = roots_outside(Q, 0);
  for (int i = 1; i <= kCrossingGrid; ++i) {
    const Real lo = static_cast<Real>(i - 1) / kCrossingGrid;
    const Real hi = static_cast<Real>(i) / kCrossingGrid;
    const int cur = roots_outside(Q, hi);
    if (cur < 0 && i < kCrossingGrid) {
      breaks.push_back(hi);
    } else if (prev >= 0 && cur >= 0) {
      bisect_crossings(Q, lo, hi, prev, cur, breaks);
    }
    prev = cur;
  }
  breaks.push_back(1);
  return breaks;
}

}  // namespace

Stripped strip(const std::vector<Complex>& ascending) {
  Real largest = 0;
  for (const auto& c : ascending) largest = std::max(largest, std::abs(c));
  if (!(largest > 0)) throw DomainError("Mahler measure of the zero polynomial");
  const Real cut = kStripThreshold * largest;
  std::size_t lo = 0;
  std::size_t hi = ascending.size();
  while (std::abs(ascending[lo]) <= cut) ++lo;
  while (std::abs(ascending[hi - 1]) <= cut) --hi;
  Stripped s;
  s.coeffs.assign(ascending.begin() + static_cast<std::ptrdiff_t>(lo),
                  ascending.begin() + static_cast<std::ptrdiff_t>(hi));
  s.shift = static_cast<int>(lo);
  if (static_cast<int>(s.coeffs.size()) - 1 > kMaxDegree) {
    throw DomainError("polynomial degree " + std::to_string(s.coeffs.size() - 1) + " exceeds " +
                      std::to_string(kMaxDegree));
  }
  return s;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& ascending) {
  const Stripped s = strip(ascending);
  const auto n = static_cast<Eigen::Index>(s.coeffs.size()) - 1;
  std::vector<Complex> roots;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-s.coeffs[0] / s.coeffs[1]);
    return roots;
  }
  Eigen::Matrix<Complex, Eigen::Dynamic, 1> c(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) c(i) = s.coeffs[static_cast<std::size_t>(i)];
  Eigen::PolynomialSolver<Complex, Eigen::Dynamic> solver(c);
  roots.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex z = solver.roots()(i);
    Complex dp;
    const Complex p = horner(s.coeffs, z, &dp);
    if (std::abs(dp) > 0) {
      const Complex polished = z - p / dp;
      if (std::abs(horner(s.coeffs, polished, nullptr)) <= std::abs(p)) z = polished;
    }
    roots.push_back(z);
  }
  return roots;
}

Real mahler_1var(const std::vector<Complex>& ascending) {
  const Stripped s = strip(ascending);
  Real m = std::log(std::abs(s.coeffs.back()));
  for (const auto& r : poly_roots(s.coeffs)) m += log_plus(std::abs(r));
  return m;
}

RootCount outside_root_count(const std::vector<Complex>& ascending, Real radius) {
  if (!(radius > 0)) throw DomainError("outside_root_count: radius must be positive");
  RootCount rc;
  for (const auto& r : poly_roots(ascending)) {
    const Real a = std::abs(r);
    if (a > radius * (1 + kCircleBand)) {
      ++rc.count;
    } else if (a >= radius * (1 - kCircleBand)) {
      rc.ambiguous = true;
    }
  }
  return rc;
}

JensenSlice jensen_slice(const LaurentPoly2& P, Real theta) {
  if (P.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  const int jmin = P.min_y();
  const int jmax = P.max_y();
  std::vector<Complex> c(static_cast<std::size_t>(jmax - jmin + 1), Complex(0));
  const Real angle = 2 * kPi * theta;
  for (const auto& [k, coeff] : P.terms()) {
    const Real phase = angle * k.first;
    c[static_cast<std::size_t>(k.second - jmin)] += coeff.get_d() * Complex(std::cos(phase), std::sin(phase));
  }
  JensenSlice slice;
  slice.theta = theta;
  const Stripped s = strip(c);
  slice.coeffs = s.coeffs;
  slice.roots = poly_roots(s.coeffs);
  slice.measure = std::log(std::abs(s.coeffs.back()));
  for (const auto& r : slice.roots) slice.measure += log_plus(std::abs(r));
  return slice;
}

MahlerResult mahler_2var_detailed(const LaurentPoly2& P, Real tol) {
  if (P.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  const bool has_x = P.depends_on_x();
  const bool has_y = P.depends_on_y();
  if (!has_x || !has_y) {
    // One variable (or a constant): Jensen directly.
    const LaurentPoly2 Q = has_x ? P.swapped() : P;
    const int jmin = Q.min_y();
    std::vector<Complex> c(static_cast<std::size_t>(Q.max_y() - jmin + 1), Complex(0));
    for (const auto& [k, coeff] : Q.terms()) c[static_cast<std::size_t>(k.second - jmin)] += coeff.get_d();
    return {mahler_1var(c), 0};
  }
  // Put the lower-degree variable in Y: fewer roots per slice.
  const LaurentPoly2 Q = (P.max_y() - P.min_y() <= P.max_x() - P.min_x()) ? P : P.swapped();
  const auto slice = [&Q](Real theta) { return jensen_slice(Q, theta).measure; };
  const auto breaks = crossing_breaks(Q);
  MahlerResult r;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Real len = breaks[i + 1] - breaks[i];
    if (!(len > 0)) continue;
    const auto q = quad::integrate(slice, breaks[i], breaks[i + 1], tol * std::max(len, Real(1e-3)));
    r.value += q.value;
    r.err_estimate += q.err_estimate;
  }
  return r;
}

LaurentPoly2 knot_a_poly() { return parse_poly("-y^2 + x*(1 - y - 2*y^2 - y^3 + y^4) - x^2*y^2"); }

Piece3Forms piece3_forms(Real tol) {
  Piece3Forms f;
  const auto slice = [](Real theta) {
    const Real c = std::cos(theta);
    return mahler_1var({Complex(1), Complex(-1), Complex(-4 * c * c), Complex(-1), Complex(1)});
  };
  f.theta_form = 4 * quad::integrate(slice, 0, kPi / 2, tol / 4).value;
  f.torus_form = 2 * kPi * mahler_2var(parse_poly("(1-y)*(1-y^3)*x - y^2*(x+1)^2"), tol / (2 * kPi));
  return f;
}

Real piece3_mahler_form(Real tol) {
  const Piece3Forms f = piece3_forms(tol);
  const Real gap = std::abs(f.theta_form - f.torus_form);
  if (gap > 100 * tol) {
    throw NonConvergence("piece3: theta form and torus form disagree", f.torus_form, gap);
  }
  return f.torus_form;
}

}  // namespace qm::mahler
