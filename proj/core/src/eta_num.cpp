#include "qmahler/eta_num.hpp"

#include <cmath>
#include <limits>

#include "qmahler/errors.hpp"

namespace qm::qseries {

namespace {

void require_positive(Real h) {
  if (!(h > 0)) throw DomainError("eta evaluation needs h = -log q > 0");
}

}  // namespace

Real log_eta_tail(Real h) {
  require_positive(h);
  Real sum = 0;
  for (int n = 1;; ++n) {
    const Real x = std::exp(-n * h);
    if (x == 0) break;
    sum += std::log1p(-x);
    if (x < std::numeric_limits<Real>::epsilon() * Real(0.05) * std::abs(sum)) break;
  }
  return sum;
}

Real log_eta(Real h) {
  require_positive(h);
  if (h >= kEtaSwitch) return -h / 24 + log_eta_tail(h);
  const Real dual = 4 * kPi * kPi / h;
  return Real(0.5) * std::log(2 * kPi / h) - dual / 24 + log_eta_tail(dual);
}

Real eta_num(Real h) { return std::exp(log_eta(h)); }

Real eta_product(Real h, int max_factors) {
  require_positive(h);
  Real prod = std::exp(-h / 24);
  for (int n = 1; n <= max_factors; ++n) {
    const Real x = std::exp(-n * h);
    if (x < std::numeric_limits<Real>::epsilon() * Real(1e-2)) break;
    prod *= 1 - x;
  }
  return prod;
}

Real log_b(Real h) {
  require_positive(h);
  // For 3h >= h >= 2 the q^{1/24} prefactors cancel exactly: q^{3/24} / q^{3/24}.
  if (h >= kEtaSwitch) return 3 * log_eta_tail(h) - log_eta_tail(3 * h);
  return 3 * log_eta(h) - log_eta(3 * h);
}

Real log_c(Real h) {
  require_positive(h);
  if (h >= kEtaSwitch) return std::log(Real(3)) - h / 3 + 3 * log_eta_tail(3 * h) - log_eta_tail(h);
  return std::log(Real(3)) + 3 * log_eta(3 * h) - log_eta(h);
}

Real b_minus_one(Real h) { return std::expm1(log_b(h)); }

ThetaTriple abc_num(Real q) {
  if (!(q > 0 && q < 1)) throw DomainError("abc_num needs 0 < q < 1");
  const Real h = -std::log(q);
  const Real lb = log_b(h);
  const Real lc = log_c(h);
  const Real b = std::exp(lb);
  const Real c = std::exp(lc);
  // a = (b^3 + c^3)^{1/3}, evaluated from the larger term to avoid overflow.
  const Real big = std::max(lb, lc);
  const Real a = std::exp(big + std::log(std::exp(3 * (lb - big)) + std::exp(3 * (lc - big))) / 3);
  return {a, b, c};
}

}  // namespace qm::qseries
