#pragma once

// Two-variable Laurent polynomials with exact rational coefficients and a
// small parser for them.
//
// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := base ('^' signed-int)?
//   base   := integer | 'x' | 'X' | 'y' | 'Y' | '(' expr ')'
// Division and negative powers are allowed only for single-term divisors.

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "qmahler/real.hpp"

namespace qm::mahler {

inline constexpr int kMaxExponent = 64;

class LaurentPoly2 {
 public:
  using Monomial = std::pair<int, int>;  // (power of X, power of Y)
  using Terms = std::map<Monomial, mpq_class>;

  LaurentPoly2() = default;
  explicit LaurentPoly2(const mpq_class& c);
  static LaurentPoly2 monomial(const mpq_class& c, int i, int j);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  mpq_class coefficient(int i, int j) const;

  bool depends_on_x() const;
  bool depends_on_y() const;
  int min_x() const;
  int max_x() const;
  int min_y() const;
  int max_y() const;

  std::complex<Real> evaluate(std::complex<Real> x, std::complex<Real> y) const;

  // P(Y, X), P(1/X, Y), X^a Y^b P.
  LaurentPoly2 swapped() const;
  LaurentPoly2 x_inverted() const;
  LaurentPoly2 shifted(int a, int b) const;

  // Nonnegative n; negative n only for single-term polynomials.
  LaurentPoly2 pow(int n) const;
  // 1 / P for a single-term P.
  LaurentPoly2 reciprocal() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator-(const LaurentPoly2& a);
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }

  // Canonical text, re-parseable by parse_poly.
  std::string to_string() const;

 private:
  Terms terms_;
  void add_term(const Monomial& m, const mpq_class& c);
};

// Throws SyntaxError (with byte offset) on malformed input or |exponent| > 64.
LaurentPoly2 parse_poly(const std::string& text);

}  // namespace qm::mahler
