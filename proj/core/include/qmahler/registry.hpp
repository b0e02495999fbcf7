#pragma once

// The identity registry: every check is a pair of independently computed
// quantities (lhs, rhs) with a status and a default tolerance.
//
// Exact q-series checks report lhs = number of mismatching coefficients and
// rhs = 0 with tolerance 0. Residual checks report the largest residual over
// their sample points as lhs and 0 as rhs.

#include <functional>
#include <string>
#include <vector>

#include "qmahler/real.hpp"

namespace qm::verify {

enum class Status { proved, conjectural };

std::string to_string(Status s);

inline constexpr Real kTolExact = 0;
inline constexpr Real kTolSingle = Real(1e-8);
inline constexpr Real kTolChained = Real(1e-7);
inline constexpr Real kTolAlphaRoute = Real(1e-6);
inline constexpr Real kTolNonIntegerA = Real(1e-6);
inline constexpr Real kTolConjectural = Real(1e-5);
inline constexpr Real kTolResidual = Real(1e-10);

struct Evaluation {
  Real lhs = 0;
  Real rhs = 0;
  // Extra text for the report, e.g. the first failing exponent.
  std::string note;
};

struct CheckDef {
  std::string id;
  std::string description;
  std::string anchor;
  Status status = Status::proved;
  Real tol = kTolSingle;
  bool exact = false;
  std::function<Evaluation()> evaluate;
};

// Fixed order: q-series, telescoping, H relations, F and H relation family,
// signature-3 table, degree-2 and degree-5 chains, the conductor-15 curve
// and its four pieces, I(y), knot, F = L, main theorem, conjectures.
const std::vector<CheckDef>& registry();

std::vector<std::string> list_checks();

// nullptr if the id is unknown.
const CheckDef* find_check(const std::string& id);

}  // namespace qm::verify
