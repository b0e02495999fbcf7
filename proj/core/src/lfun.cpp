#include "qmahler/lfun.hpp"

#include <cmath>

#include "qmahler/errors.hpp"
#include "qmahler/eta_num.hpp"
#include "qmahler/quad.hpp"

namespace qm::lfun {

namespace {

Real to_real(Exponent e) {
  return static_cast<Real>(e.numerator()) / static_cast<Real>(e.denominator());
}

// int_0^inf g, split at kSplit; g must vanish fast at both ends.
Real halfline(const quad::Integrand& g, Real tol) {
  return quad::integrate(g, 0, kSplit, tol / 2).value + quad::integrate_from(g, kSplit, tol / 2).value;
}

}  // namespace

std::optional<EtaProduct> LatticeSumSpec::cusp_form() const {
  if (!integer_A) return std::nullopt;
  return EtaProduct({{A, 1}, {A * B, 1}, {A * C, 1}, {A * B * C, 1}});
}

LatticeSumSpec lattice_spec(Exponent B, Exponent C) {
  if (B <= 0 || C <= 0) throw DomainError("lattice sum: B and C must be positive");
  const Exponent A = Exponent(24) / ((B + 1) * (C + 1));
  return {B, C, A, A.denominator() == 1};
}

Real L_eta_cusp(const EtaProduct& f, Real tol) {
  if (!f.is_cusp_shape()) {
    throw DomainError("L_eta_cusp: need total eta power 4 and positive leading exponent, got " +
                      f.to_string());
  }
  const auto g = [&f](Real t) { return t * std::exp(f.log_value(2 * kPi * t)); };
  // The (2 pi)^2 prefactor scales the error; tighten accordingly.
  const Real scale = 4 * kPi * kPi;
  return scale * halfline(g, tol / scale);
}

Real F_lattice(Real B, Real C, Real tol) {
  if (!(B > 0 && C > 0)) throw DomainError("F_lattice: B and C must be positive");
  const Real scales[] = {24, 24 * B, 24 * C, 24 * B * C};
  const auto g = [&scales](Real t) {
    Real s = 0;
    for (Real k : scales) s += qseries::log_eta(k * t);
    return t * std::exp(s);
  };
  const Real prefactor = (B + 1) * (B + 1) * (C + 1) * (C + 1);
  return prefactor * halfline(g, tol / prefactor);
}

Real F_lattice(Exponent B, Exponent C, Real tol) {
  lattice_spec(B, C);
  return F_lattice(to_real(B), to_real(C), tol);
}

std::vector<mpz_class> eta_coeffs(const EtaProduct& f, int N) {
  if (N < 0) throw DomainError("eta_coeffs: N must be nonnegative");
  if (f.leading_exponent() < 0) throw DomainError("eta_coeffs: negative leading exponent");
  const qseries::QExpansion s = f.series(Exponent(N));
  std::vector<mpz_class> out(static_cast<std::size_t>(N));
  for (const auto& [key, c] : s.terms()) {
    const Exponent e(key, s.den());
    if (e.denominator() != 1 || c.get_den() != 1) {
      throw DomainError("eta_coeffs: " + f.to_string() + " has non-integral exponents or coefficients");
    }
    const auto n = e.numerator();
    if (n >= 1 && n <= N) out[static_cast<std::size_t>(n - 1)] = c.get_num();
  }
  return out;
}

}  // namespace qm::lfun
