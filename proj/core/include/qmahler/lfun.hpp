#pragma once

// L(f, 2) of weight-2 eta-product cusp forms by the Mellin integral, and the
// alternating quadruple lattice sum F(B, C) for rational B, C > 0.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qmahler/eta_product.hpp"
#include "qmahler/real.hpp"

namespace qm::lfun {

using qseries::EtaProduct;
using qseries::Exponent;

// Split point of the half-line integrals: below it every eta argument goes
// through the modular transformation.
inline constexpr Real kSplit = Real(1) / 24;

struct LatticeSumSpec {
  Exponent B;
  Exponent C;
  Exponent A;  // 24 / ((B+1)(C+1))
  bool integer_A = false;

  // eta(q^A) eta(q^{AB}) eta(q^{AC}) eta(q^{ABC}) when A is an integer.
  std::optional<EtaProduct> cusp_form() const;
};

LatticeSumSpec lattice_spec(Exponent B, Exponent C);

// (2 pi)^2 int_0^inf t f(e^{-2 pi t}) dt. Requires is_cusp_shape().
Real L_eta_cusp(const EtaProduct& f, Real tol = Real(1e-11));

// (B+1)^2 (C+1)^2 int_0^inf t eta(e^{-24t}) eta(e^{-24Bt}) eta(e^{-24Ct}) eta(e^{-24BCt}) dt,
// termwise equal to the quadruple sum over n_i of
// (-1)^{sum n_i} / ((6n_1+1)^2 + B(6n_2+1)^2 + C(6n_3+1)^2 + BC(6n_4+1)^2)^2.
Real F_lattice(Exponent B, Exponent C, Real tol = Real(1e-11));
Real F_lattice(Real B, Real C, Real tol = Real(1e-11));

// a_1..a_N of f = sum a_n q^n; f must have integral exponents and coefficients.
std::vector<mpz_class> eta_coeffs(const EtaProduct& f, int N);

}  // namespace qm::lfun
