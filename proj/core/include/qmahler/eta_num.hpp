#pragma once

// Floating-point evaluation of the Dedekind eta function and the cubic theta
// functions a, b, c on 0 < q < 1. Everything is parametrised by h = -log q so
// that q -> 1 is reachable without cancellation; for h < 2 the modular
// transformation eta(e^{-h}) = sqrt(2 pi / h) eta(e^{-4 pi^2 / h}) brings the
// product back into its fast-converging range.

#include "qmahler/real.hpp"

namespace qm::qseries {

inline constexpr Real kEtaSwitch = 2;

// sum_{n>=1} log(1 - e^{-n h}); the product part of log eta without q^{1/24}.
Real log_eta_tail(Real h);

// log eta(e^{-h}) for any h > 0.
Real log_eta(Real h);

// eta(e^{-h}); underflows to 0 for h below ~0.002.
Real eta_num(Real h);

// The plain truncated product q^{1/24} prod (1 - q^n), no transformation.
// Only practical for moderate h; used to cross-check eta_num.
Real eta_product(Real h, int max_factors = 1'000'000);

// log b(e^{-h}), log c(e^{-h}) from the eta quotients.
Real log_b(Real h);
Real log_c(Real h);

// b(e^{-h}) - 1 without cancellation for large h.
Real b_minus_one(Real h);

struct ThetaTriple {
  Real a;
  Real b;
  Real c;
};

// (a, b, c) at q; a through the cubic relation a^3 = b^3 + c^3.
ThetaTriple abc_num(Real q);

}  // namespace qm::qseries
