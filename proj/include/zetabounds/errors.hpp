#pragma once

#include <stdexcept>
#include <string>

namespace zetabounds {

// Argument outside the domain of the requested function (log of a
// non-positive ball, zeta_real at sigma <= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested at (a ball containing) the pole s = 1.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by a ball that contains zero. Retrying at a higher precision
// usually resolves it.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named constraint of the formula chain does not hold.
class ConstraintError : public std::runtime_error {
 public:
  ConstraintError(std::string constraint, const std::string& what)
      : std::runtime_error(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

}  // namespace zetabounds
