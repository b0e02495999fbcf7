#pragma once

// Exact truncated q-expansions with rational coefficients.
//
// A QExpansion lives on the exponent grid Z/D: the stored key k stands for the
// monomial q^(k/D). Every series carries a rational truncation order; all
// coefficients with exponent <= order are exact, everything above is unknown
// and is never stored.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

#include "qmahler/real.hpp"

namespace qm::qseries {

using Exponent = boost::rational<std::int64_t>;

inline constexpr std::int64_t kDefaultGrid = 72;
inline constexpr std::int64_t kMaxGrid = 10'000;
inline constexpr std::int64_t kDefaultOrder = 40;

class QExpansion {
 public:
  using Terms = std::map<std::int64_t, mpq_class>;

  // The zero series on grid `den`, exact through `order`.
  QExpansion(std::int64_t den, Exponent order);

  // c * q^exponent, exact through `order`.
  static QExpansion monomial(const mpq_class& c, Exponent exponent, Exponent order,
                             std::int64_t den = kDefaultGrid);
  static QExpansion constant(const mpq_class& c, Exponent order) {
    return monomial(c, Exponent(0), order, 1);
  }

  std::int64_t den() const noexcept { return den_; }
  Exponent order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Smallest exponent carrying a nonzero coefficient.
  std::optional<Exponent> leading_exponent() const;

  // Coefficient of q^e; zero if e is not on the grid or carries no term.
  // Asking above the truncation order throws GridError.
  mpq_class coefficient(Exponent e) const;

  // Sets the coefficient of q^e (re-grids if needed); e must be <= order.
  void set_coefficient(Exponent e, const mpq_class& c);

  // Same series expressed on the finer grid `den` (a multiple of den()).
  QExpansion regrid(std::int64_t den) const;

  // Drops terms above n and lowers the order to min(order, n).
  QExpansion truncated(Exponent n) const;

  // q -> q^r for rational r > 0; exponents and order are scaled by r.
  QExpansion substitute(Exponent r) const;

  QExpansion pow(int n) const;

  // Numeric value at a real 0 < q < 1 from the stored coefficients only.
  Real evaluate(Real q) const;

  // True iff every coefficient is an integer.
  bool is_integral() const;

  QExpansion& operator+=(const QExpansion& rhs);
  QExpansion& operator-=(const QExpansion& rhs);
  QExpansion& operator*=(const mpq_class& c);

  friend QExpansion operator+(QExpansion lhs, const QExpansion& rhs) { return lhs += rhs; }
  friend QExpansion operator-(QExpansion lhs, const QExpansion& rhs) { return lhs -= rhs; }
  friend QExpansion operator-(QExpansion s) { return s *= mpq_class(-1); }
  friend QExpansion operator*(QExpansion s, const mpq_class& c) { return s *= c; }
  friend QExpansion operator*(const mpq_class& c, QExpansion s) { return s *= c; }
  friend QExpansion operator*(const QExpansion& lhs, const QExpansion& rhs);
  friend QExpansion operator/(const QExpansion& lhs, const QExpansion& rhs);

 private:
  std::int64_t den_;
  Exponent order_;
  Terms terms_;

  std::int64_t key_bound() const;  // largest key allowed by order_
  void reduce_grid();
};

// Brings both operands to the lcm grid; throws GridError past kMaxGrid.
std::int64_t common_grid(std::int64_t d1, std::int64_t d2);

// Sum_{n in Z} (-1)^n q^{scale (6n+1)^2 / 24}, truncated at `order`.
QExpansion eta_series(Exponent scale, std::int64_t den, Exponent order);
inline QExpansion eta_series(Exponent scale, Exponent order = Exponent(kDefaultOrder)) {
  return eta_series(scale, kDefaultGrid, order);
}

// a(q) = sum over (m,n) in Z^2 of q^{m^2+mn+n^2}, by lattice enumeration.
QExpansion theta_a_series(std::int64_t order);
// b(q) = eta^3(q)/eta(q^3) and c(q) = 3 eta^3(q^3)/eta(q) by series division.
QExpansion b_series(std::int64_t order);
QExpansion c_series(std::int64_t order);
// Direct double sums over Z^2, the independent definitions of b and c.
QExpansion b_lattice_series(std::int64_t order);
QExpansion c_lattice_series(std::int64_t order);

// a(q^r), b(q^r), c(q^r) exact through q-order `order`.
QExpansion a_at(Exponent r, Exponent order);
QExpansion b_at(Exponent r, Exponent order);
QExpansion c_at(Exponent r, Exponent order);

struct IdentityCheck {
  bool holds = true;
  std::int64_t discrepancies = 0;
  // First offending exponent and the two coefficients found there.
  std::optional<Exponent> first_exponent;
  mpq_class lhs_coefficient;
  mpq_class rhs_coefficient;
};

// Coefficientwise comparison of lhs and rhs for all exponents <= n.
IdentityCheck assert_series_identity(const QExpansion& lhs, const QExpansion& rhs, Exponent n);

std::string to_string(Exponent e);
Real to_real(const mpq_class& q);

// Sorted "exponent<TAB>coefficient" lines, exponents as exact fractions.
std::string render_tsv(const QExpansion& s);

}  // namespace qm::qseries
