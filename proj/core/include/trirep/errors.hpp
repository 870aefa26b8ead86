#pragma once

#include <stdexcept>
#include <string>

namespace trirep {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A 64-bit intermediate would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An identity that must hold by construction did not (exact division,
/// sign symmetry, ...). Always indicates a bug or a misread formula.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Brute-force enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No closed form is registered for the requested quadruple.
class UnsupportedForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace trirep
