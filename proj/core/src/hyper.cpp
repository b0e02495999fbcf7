#include "qmahler/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qmahler/errors.hpp"
#include "qmahler/quad.hpp"

namespace qm::hyper {

namespace {

constexpr long kMaxTerms = 1'000'000;

bool nonpositive_integer(Real x) { return x <= 0 && x == std::floor(x); }

// Neumaier compensated sum.
struct Accumulator {
  Real sum = 0;
  Real comp = 0;
  void add(Real x) {
    const Real t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  Real value() const { return sum + comp; }
};

// Ratio t_{n+1} / t_n of consecutive series terms.
Real term_ratio(const HyperParams& p, long n) {
  const Real nn = static_cast<Real>(n);
  Real r = p.z / (nn + 1);
  for (Real a : p.upper) r *= a + nn;
  for (Real b : p.lower) r /= b + nn;
  return r;
}

Real pfq_inside(const HyperParams& p, Real tol) {
  const bool balanced = p.upper.size() == p.lower.size() + 1;
  Accumulator acc;
  Real term = 1;
  for (long n = 0; n < kMaxTerms; ++n) {
    acc.add(term);
    const Real ratio = term_ratio(p, n);
    term *= ratio;
    if (term == 0) return acc.value();
    const Real r = balanced ? std::max(std::abs(ratio), std::abs(p.z)) : std::abs(ratio);
    if (r < 1 && std::abs(term) / (1 - r) <= tol * std::max(Real(1), std::abs(acc.value()))) {
      acc.add(term);
      return acc.value();
    }
  }
  throw NonConvergence("pfq: series did not converge in 10^6 terms", static_cast<double>(acc.value()),
                       static_cast<double>(std::abs(term)));
}

// z = 1 with convergence exponent s > 0: S - S_N ~ sum_j c_j N^{-(s+j-1)}.
Real pfq_unit(const HyperParams& p, Real s, Real tol) {
  constexpr long kBase = 64;
  constexpr int kLevels = 9;
  std::vector<Real> partial;
  Accumulator acc;
  Real term = 1;
  long next = kBase;
  for (long n = 0; static_cast<int>(partial.size()) < kLevels; ++n) {
    if (n == next) {
      partial.push_back(acc.value());
      next *= 2;
    }
    acc.add(term);
    term *= term_ratio(p, n);
    if (term == 0) return acc.value();
  }
  // Richardson table, one row per level.
  std::vector<Real> row = partial;
  Real prev_diag = row.front();
  Real diag = row.back();
  for (int j = 1; j < kLevels; ++j) {
    const Real factor = std::pow(Real(2), s + j - 1);
    for (int k = kLevels - 1; k >= j; --k) row[k] = (factor * row[k] - row[k - 1]) / (factor - 1);
    prev_diag = diag;
    diag = row[kLevels - 1];
  }
  const Real err = std::abs(diag - prev_diag);
  if (err > std::max(tol, Real(1e-10)) * std::max(Real(1), std::abs(diag))) {
    throw NonConvergence("pfq at z = 1: extrapolation did not settle", static_cast<double>(diag),
                         static_cast<double>(err));
  }
  return diag;
}

}  // namespace

Real pfq(const HyperParams& p, Real tol) {
  for (Real b : p.lower) {
    if (nonpositive_integer(b)) throw DomainError("pfq: lower parameter is a nonpositive integer");
  }
  for (Real a : p.upper) {
    if (nonpositive_integer(a)) return pfq_inside(p, tol);  // terminating polynomial
  }
  if (p.z == 0) return 1;
  const std::size_t np = p.upper.size();
  const std::size_t nq = p.lower.size();
  if (np > nq + 1) throw DomainError("pfq: p > q + 1 diverges for z != 0");
  if (np <= nq) return pfq_inside(p, tol);
  const Real az = std::abs(p.z);
  if (az < 1) return pfq_inside(p, tol);
  const Real s = std::accumulate(p.lower.begin(), p.lower.end(), Real(0)) -
                 std::accumulate(p.upper.begin(), p.upper.end(), Real(0));
  if (az > 1) throw DomainError("pfq: |z| > 1");
  if (s <= 0) throw DomainError("pfq: divergent at |z| = 1 (sum(lower) - sum(upper) <= 0)");
  if (p.z != 1) throw DomainError("pfq: only z = 1 is supported on the unit circle");
  return pfq_unit(p, s, tol);
}

Real ellK(Real z) {
  if (!(z >= 0 && z < 1)) throw DomainError("ellK: need 0 <= z < 1");
  // Descending Landen steps K(k) = (1 + k1) K(k1), k1 = (1 - k')/(1 + k').
  Real factor = 1;
  while (z * z > Real(0.9)) {
    const Real kc = std::sqrt((1 - z) * (1 + z));
    z = (1 - kc) / (1 + kc);
    factor *= 1 + z;
  }
  return factor * kPi / 2 * pfq({{0.5, 0.5}, {1}, z * z});
}

Real dirichlet_L3(int s) {
  if (s == 1) return kPi / (3 * kSqrt3);
  if (s != 2) throw DomainError("dirichlet_L3: only s = 1, 2 are supported");
  // sum_{k>=0} g(k), g(k) = (3k+1)^-2 - (3k+2)^-2: partial sum plus Euler-Maclaurin tail.
  constexpr int kN = 40;
  Accumulator acc;
  for (int k = kN - 1; k >= 0; --k) {
    acc.add(1 / ((3 * Real(k) + 1) * (3 * Real(k) + 1)) - 1 / ((3 * Real(k) + 2) * (3 * Real(k) + 2)));
  }
  // Derivatives of (3k+c)^-2: g^{(m)} = (-1)^m (m+1)! 3^m (3k+c)^{-m-2}.
  auto deriv = [](int m, Real c) {
    const Real x = 3 * Real(kN) + c;
    Real fact = 1;
    for (int i = 2; i <= m + 1; ++i) fact *= i;
    return (m % 2 ? -1 : 1) * fact * std::pow(Real(3), m) * std::pow(x, Real(-m - 2));
  };
  auto g_deriv = [&](int m) { return deriv(m, 1) - deriv(m, 2); };
  const Real x1 = 3 * Real(kN) + 1;
  const Real x2 = 3 * Real(kN) + 2;
  Real tail = 1 / (3 * x1) - 1 / (3 * x2) + g_deriv(0) / 2;
  // B_2/2!, B_4/4!, B_6/6!, B_8/8!, B_10/10!
  const Real bern[] = {Real(1) / 12, Real(-1) / 720, Real(1) / 30240, Real(-1) / 1209600,
                       Real(1) / 47900160};
  for (int j = 1; j <= 5; ++j) tail -= bern[j - 1] * g_deriv(2 * j - 1);
  acc.add(tail);
  return acc.value();
}

Real m_alpha_3f2(Real alpha) {
  if (!(alpha > 0 && alpha <= 4)) throw DomainError("m_alpha_3f2: need 0 < alpha <= 4");
  return alpha / 4 * pfq({{0.5, 0.5, 0.5}, {1, 1.5}, alpha * alpha / 16});
}

Real m_alpha_4f3(Real alpha) {
  if (!(alpha >= 4)) throw DomainError("m_alpha_4f3: need alpha >= 4");
  return std::log(alpha) - 2 / (alpha * alpha) * pfq({{1.5, 1.5, 1, 1}, {2, 2, 2}, 16 / (alpha * alpha)});
}

Real m_alpha(Real alpha) {
  if (!(alpha > 0)) throw DomainError("m_alpha: need alpha > 0");
  return alpha <= 4 ? m_alpha_3f2(alpha) : m_alpha_4f3(alpha);
}

Real I_integral(Real y, Real tol) {
  if (!(y >= 1)) throw DomainError("I(y): need y >= 1");
  auto integrand = [y](Real u, Real one_minus_u) {
    const Real root = std::sqrt(u) * std::sqrt(one_minus_u) * std::sqrt(y - 1 + u) * std::sqrt(y + u);
    return (y - 1 + 2 * u) * std::log(u) / root;
  };
  const auto left = quad::integrate_de(
      quad::EndpointIntegrand([&](Real, Real da, Real) { return integrand(da, 1 - da); }), 0, 0.5,
      tol / 2);
  const auto right = quad::integrate_de(
      quad::EndpointIntegrand([&](Real x, Real, Real db) { return integrand(x, db); }), 0.5, 1,
      tol / 2);
  return -2 / kPi * (left.value + right.value);
}

Real I_hyper(Real y) {
  if (!(y >= 1)) throw DomainError("I(y): need y >= 1");
  const Real z = 1 / (y * y);
  return 4 * kLn2 - z / 8 * pfq({{1.5, 1.5, 1, 1}, {2, 2, 2}, z}) -
         pfq({{0.5, 0.5, 0.5}, {1, 1.5}, z}) / y;
}

Real I_mahler(Real y) {
  if (!(y >= 1)) throw DomainError("I(y): need y >= 1");
  return m_alpha(4 * y) - m_alpha(4 / y) - std::log(y / 4);
}

}  // namespace qm::hyper
