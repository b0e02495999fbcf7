#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qm {

// Argument outside the mathematical domain of an operation (h <= 0, q not in
// (0,1), y < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A q-expansion operation needed a grid denominator that is incompatible with
// the operands or exceeds the configured bound.
class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series division by an expansion with no trusted leading coefficient.
class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative numerical method stopped before reaching its tolerance. The
// partial estimate and its error are carried along for diagnostics.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double partial, double err)
      : std::runtime_error(what), partial_(partial), err_(err) {}

  double partial() const noexcept { return partial_; }
  double error_estimate() const noexcept { return err_; }

 private:
  double partial_;
  double err_;
};

// Malformed polynomial text; offset is the 0-based byte position.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qm
