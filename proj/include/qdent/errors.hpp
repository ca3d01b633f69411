#pragma once

#include <stdexcept>
#include <string>

namespace qdent {

// Argument outside the mathematical domain of an operation (bad N/M, even N
// for the pi-time formula, too few fit points, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Requested sector exceeds the configured oracle memory budget.
class BudgetError : public std::length_error {
 public:
  explicit BudgetError(const std::string& what) : std::length_error(what) {}
};

// Internal numerical failure: eigensolver non-convergence, spectrum that does
// not normalize. These indicate bugs rather than bad input.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdent
