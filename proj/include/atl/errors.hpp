#pragma once

#include <stdexcept>
#include <string>

namespace atl {

// Input outside the mathematical domain of an operation (y <= 0, g < 2, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A series, reduction loop or quadrature did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Result would exceed a configured size limit (eigenvalue enumeration).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace atl
