#pragma once

// Mahler measures in one and two variables. One variable: Jensen's formula
// over the roots. Two variables: Jensen in Y, then adaptive quadrature in
// theta with X = e^{2 pi i theta}.

#include <complex>
#include <vector>

#include "qmahler/laurent.hpp"
#include "qmahler/real.hpp"

namespace qm::mahler {

using Complex = std::complex<Real>;

inline constexpr int kMaxDegree = 64;
inline constexpr Real kStripThreshold = Real(1e-30);
inline constexpr Real kCircleBand = Real(1e-12);

// Ascending coefficients with leading and trailing zeros (relative to the
// largest modulus) removed. Throws DomainError for the zero polynomial.
struct Stripped {
  std::vector<Complex> coeffs;  // c_0 != 0, c_n != 0
  int shift = 0;                // number of trailing zeros removed (power of Y)
};
Stripped strip(const std::vector<Complex>& ascending);

// Roots of a polynomial with ascending coefficients; companion-matrix
// eigenvalues followed by one Newton polish per root.
std::vector<Complex> poly_roots(const std::vector<Complex>& ascending);

// log|leading| + sum max(0, log|root|).
Real mahler_1var(const std::vector<Complex>& ascending);

struct RootCount {
  int count = 0;
  bool ambiguous = false;  // some root within kCircleBand of the circle
};
RootCount outside_root_count(const std::vector<Complex>& ascending, Real radius = 1);

// P(e^{2 pi i theta}, Y) as a polynomial in Y, its roots, and the Jensen value.
struct JensenSlice {
  Real theta = 0;
  std::vector<Complex> coeffs;  // ascending in Y after stripping
  std::vector<Complex> roots;
  Real measure = 0;
};
JensenSlice jensen_slice(const LaurentPoly2& P, Real theta);

struct MahlerResult {
  Real value = 0;
  Real err_estimate = 0;
};

MahlerResult mahler_2var_detailed(const LaurentPoly2& P, Real tol = Real(1e-11));
inline Real mahler_2var(const LaurentPoly2& P, Real tol = Real(1e-11)) {
  return mahler_2var_detailed(P, tol).value;
}

// -Y^2 + X(1 - Y - 2Y^2 - Y^3 + Y^4) - X^2 Y^2.
LaurentPoly2 knot_a_poly();

// 4 int_0^{pi/2} m((1-Y)(1-Y^3) - 4Y^2 cos^2 theta) d theta and
// 2 pi m((1-Y)(1-Y^3)X - Y^2(X+1)^2); the two must agree.
struct Piece3Forms {
  Real theta_form = 0;
  Real torus_form = 0;
};
Piece3Forms piece3_forms(Real tol = Real(1e-11));

// Torus form of the above after checking it against the theta form to
// 100 * tol; throws NonConvergence if the two disagree.
Real piece3_mahler_form(Real tol = Real(1e-11));

}  // namespace qm::mahler
