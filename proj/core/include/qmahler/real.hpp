#pragma once

#include <numbers>

namespace qm {

// Floating-point type used by every numeric module. Switching this alias to
// `long double` widens the whole library (quadrature, eta products,
// hypergeometric sums, root finding).
using Real = double;

inline constexpr Real kPi = std::numbers::pi_v<Real>;
inline constexpr Real kSqrt3 = std::numbers::sqrt3_v<Real>;
inline constexpr Real kLn2 = std::numbers::ln2_v<Real>;

}  // namespace qm
