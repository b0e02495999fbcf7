#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmahler/registry.hpp"

namespace qm::verify {

struct CheckResult {
  std::string id;
  std::string description;
  std::string paper_anchor;
  Status status = Status::proved;
  Real lhs = 0;
  Real rhs = 0;
  Real abs_err = 0;
  Real tol = 0;
  bool pass = false;
  double seconds = 0;
};

class UnknownCheck : public std::out_of_range {
 public:
  explicit UnknownCheck(const std::string& id) : std::out_of_range("unknown check id: " + id) {}
};

// A tolerance override applies to numeric checks only; exact checks stay at 0.
// Computation errors become failed results with the message in the description.
CheckResult run_check(const std::string& id, std::optional<Real> tol_override = std::nullopt);

struct RunOptions {
  std::optional<std::string> filter;  // shell glob on ids
  std::optional<Real> tol_override;
  bool proved_only = false;
  int jobs = 1;
};

// Results in registry order whatever the completion order.
std::vector<CheckResult> run_all(const RunOptions& options);

// VERIFY_JOBS if set and positive, else the hardware concurrency (at least 1).
int default_jobs();

// 0 iff every proved check passed.
int exit_code(const std::vector<CheckResult>& results);

}  // namespace qm::verify
