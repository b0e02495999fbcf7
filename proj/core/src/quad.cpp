#include "qmahler/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qmahler/errors.hpp"

namespace qm::quad {

namespace {

constexpr Real kEps = std::numeric_limits<Real>::epsilon();

[[noreturn]] void fail(const std::string& why, Real partial, Real err) {
  throw NonConvergence(why, static_cast<double>(partial), static_cast<double>(err));
}

// ---- Gauss-Kronrod 15/31 -------------------------------------------------

struct Panel {
  Real a;
  Real b;
  Real value;
  Real err;
  Real abs_value;
  int depth;
};

struct GKRule {
  // Kronrod abscissae x_0 = 0 < x_1 < ... < x_15; Gauss nodes are the even ones.
  const std::array<Real, 16>& x = boost::math::quadrature::gauss_kronrod<Real, 31>::abscissa();
  const std::array<Real, 16>& wk = boost::math::quadrature::gauss_kronrod<Real, 31>::weights();
  const std::array<Real, 8>& wg = boost::math::quadrature::gauss<Real, 15>::weights();
};

const GKRule& gk_rule() {
  static const GKRule rule;
  return rule;
}

Panel gk_panel(const Integrand& f, Real a, Real b, int depth, long& evals) {
  const GKRule& r = gk_rule();
  const Real c = (a + b) / 2;
  const Real hw = (b - a) / 2;
  const Real f0 = f(c);
  Real kron = r.wk[0] * f0;
  Real gauss = r.wg[0] * f0;
  Real abs_sum = r.wk[0] * std::abs(f0);
  for (std::size_t i = 1; i < r.x.size(); ++i) {
    const Real dx = hw * r.x[i];
    const Real fl = f(c - dx);
    const Real fr = f(c + dx);
    kron += r.wk[i] * (fl + fr);
    abs_sum += r.wk[i] * (std::abs(fl) + std::abs(fr));
    if (i % 2 == 0) gauss += r.wg[i / 2] * (fl + fr);
  }
  evals += 31;
  const Real value = kron * hw;
  const Real err = std::abs((kron - gauss) * hw);
  if (!std::isfinite(value) || !std::isfinite(err)) {
    fail("non-finite integrand on [" + std::to_string(a) + ", " + std::to_string(b) + "]", 0, 0);
  }
  return {a, b, value, err, abs_sum * std::abs(hw), depth};
}

Real panel_sum(std::vector<Panel> panels) {
  std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
  Real sum = 0;
  for (const Panel& p : panels) sum += p.value;
  return sum;
}

// ---- tanh-sinh -----------------------------------------------------------

// Abscissa offset and weight for the node at parameter t >= 0 on an interval
// of length len. `dist` is the distance from the endpoint the node clusters at.
struct DENode {
  Real dist;
  Real weight;
};

DENode de_node(Real t, Real len) {
  const Real u = kPi / 2 * std::sinh(t);
  const Real e = std::exp(-2 * u);
  const Real dist = len * e / (1 + e);
  const Real weight = len * kPi * std::cosh(t) * e / ((1 + e) * (1 + e));
  return {dist, weight};
}

Real de_tmax() {
  // Largest t whose node is still a normal distance away from the endpoint.
  const Real umax = -std::log(std::numeric_limits<Real>::min()) / 2;
  return std::asinh(2 * umax / kPi);
}

}  // namespace

Quadrature integrate(const Integrand& f, Real a, Real b, Real tol) {
  if (!(a < b)) throw DomainError("integrate needs a < b");
  long evals = 0;
  std::vector<Panel> heap;
  auto by_err = [](const Panel& p, const Panel& q) { return p.err < q.err; };
  heap.push_back(gk_panel(f, a, b, 0, evals));

  Real total_err = heap.front().err;
  Real total_abs = heap.front().abs_value;
  for (long iter = 1;; ++iter) {
    const Real goal = std::max(tol, 50 * kEps * total_abs);
    if (total_err <= goal) break;
    if (iter % 64 == 0) {
      total_err = total_abs = 0;
      for (const Panel& p : heap) {
        total_err += p.err;
        total_abs += p.abs_value;
      }
      if (total_err <= goal) break;
    }
    std::pop_heap(heap.begin(), heap.end(), by_err);
    const Panel worst = heap.back();
    heap.pop_back();
    if (worst.depth >= kMaxDepth || evals + 62 > kMaxEvaluations) {
      heap.push_back(worst);
      fail("adaptive quadrature did not converge (depth/evaluation limit)", panel_sum(heap),
           total_err);
    }
    const Real mid = (worst.a + worst.b) / 2;
    const Panel left = gk_panel(f, worst.a, mid, worst.depth + 1, evals);
    const Panel right = gk_panel(f, mid, worst.b, worst.depth + 1, evals);
    total_err += left.err + right.err - worst.err;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_err);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_err);
  }
  Real err = 0;
  for (const Panel& p : heap) err += p.err;
  return {panel_sum(heap), err, evals};
}

Quadrature integrate_de(const EndpointIntegrand& f, Real a, Real b, Real tol) {
  if (!(a < b)) throw DomainError("integrate_de needs a < b");
  constexpr int kMinLevel = 4;
  constexpr int kMaxLevel = 12;
  const Real len = b - a;
  const Real tmax = de_tmax();
  long evals = 0;
  Real abs_sum = 0;

  // Sum of weight * f over nodes t = j h for j = first, first + step, ...; both signs of t.
  auto level_sum = [&](Real h, int step, int first) {
    Real sum = 0;
    const int jmax = static_cast<int>(std::floor(tmax / h));
    for (int j = first; j <= jmax; j += step) {
      const Real t = j * h;
      const DENode node = de_node(t, len);
      if (node.weight == 0 || node.dist == 0) continue;
      Real contrib;
      if (j == 0) {
        contrib = node.weight * f(a + len / 2, len / 2, len / 2);
        ++evals;
      } else {
        const Real fr = f(b - node.dist, len - node.dist, node.dist);
        const Real fl = f(a + node.dist, node.dist, len - node.dist);
        evals += 2;
        contrib = node.weight * (fl + fr);
        abs_sum += node.weight * (std::abs(fl) + std::abs(fr));
      }
      if (!std::isfinite(contrib)) {
        fail("non-finite integrand at tanh-sinh node t=" + std::to_string(t), sum * h, 0);
      }
      sum += contrib;
    }
    return sum;
  };

  Real h = 1;
  Real estimate = level_sum(h, 1, 0) * h;
  Real diff = std::abs(estimate);
  for (int level = 1; level <= kMaxLevel; ++level) {
    h /= 2;
    const Real next = estimate / 2 + level_sum(h, 2, 1) * h;
    diff = std::abs(next - estimate);
    estimate = next;
    const Real goal = std::max(tol, 50 * kEps * abs_sum * h);
    if (level >= kMinLevel && diff <= goal) return {estimate, diff, evals};
  }
  fail("tanh-sinh quadrature did not converge", estimate, diff);
}

Quadrature integrate_de(const Integrand& f, Real a, Real b, Real tol) {
  return integrate_de(
      EndpointIntegrand([&](Real x, Real, Real) {
        if (x <= a || x >= b) return Real(0);
        return f(x);
      }),
      a, b, tol);
}

Quadrature integrate_from(const Integrand& f, Real a, Real tol) {
  // t = a + s / (1 - s), dt = ds / (1 - s)^2; 1 - s is passed exactly.
  return integrate_de(
      EndpointIntegrand([&](Real s, Real, Real one_minus_s) {
        const Real t = a + s / one_minus_s;
        if (!std::isfinite(t)) return Real(0);
        const Real v = f(t);
        return v == 0 ? v : v / one_minus_s / one_minus_s;
      }),
      Real(0), Real(1), tol);
}

Quadrature integrate_halfline(const Integrand& f, Real tol) {
  Quadrature q = integrate_de(f, Real(0), Real(1), tol / 2);
  q += integrate_from(f, Real(1), tol / 2);
  return q;
}

}  // namespace qm::quad
