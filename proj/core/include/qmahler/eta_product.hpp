#pragma once

// Finite products prod_i eta(q^{s_i})^{p_i} with rational scales s_i > 0.

#include <string>
#include <vector>

#include "qmahler/qseries.hpp"

namespace qm::qseries {

struct EtaFactor {
  Exponent scale;
  int power = 1;

  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

class EtaProduct {
 public:
  EtaProduct() = default;
  // Merges equal scales, drops zero powers, sorts by scale.
  explicit EtaProduct(std::vector<EtaFactor> factors);

  // "3^2,9^2", "1,3,5,15", "3/2^4": comma list of scale[^power].
  static EtaProduct parse(const std::string& text);

  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
  int total_power() const;
  // sum p_i s_i / 24: exponent of the leading monomial.
  Exponent leading_exponent() const;
  // Weight 2 with a vanishing constant term.
  bool is_cusp_shape() const;

  // Exact expansion through q^order on grid 24 * lcm(scale denominators).
  QExpansion series(Exponent order) const;
  // log f(e^{-h}) through the transformation-safe eta evaluation.
  Real log_value(Real h) const;

  std::string to_string() const;

  friend bool operator==(const EtaProduct&, const EtaProduct&) = default;

 private:
  std::vector<EtaFactor> factors_;
};

}  // namespace qm::qseries
