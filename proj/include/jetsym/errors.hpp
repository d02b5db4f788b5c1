#pragma once

#include <stdexcept>
#include <string>

#include "jetsym/diffpoly.hpp"

namespace jetsym {

class SymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// D_x⁻¹ was asked to integrate something outside the image of D_x. Carries
/// the Euler-operator residual as certificate.
class NotATotalDerivative : public SymmetryError {
 public:
  NotATotalDerivative(const std::string& what, DiffPoly euler_residual)
      : SymmetryError(what), euler_residual_(std::move(euler_residual)) {}
  const DiffPoly& euler_residual() const { return euler_residual_; }

 private:
  DiffPoly euler_residual_;
};

/// A potential-Burgers characteristic that has no Burgers counterpart.
class NotProjectable : public SymmetryError {
 public:
  using SymmetryError::SymmetryError;
};

/// w itself (rather than one of its x-derivatives) met the w_x ↦ −½v rule.
class BareDependentVariable : public SymmetryError {
 public:
  using SymmetryError::SymmetryError;
};

class OrderExceeded : public SymmetryError {
 public:
  using SymmetryError::SymmetryError;
};

class AnsatzTooLarge : public SymmetryError {
 public:
  AnsatzTooLarge(std::size_t size, std::size_t cap)
      : SymmetryError("ansatz has " + std::to_string(size) + " monomials, cap is " + std::to_string(cap)),
        size_(size) {}
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
};

/// Operand does not belong to the ring the operation works in (e.g. a
/// parameter function passed to a Burgers operation).
class InvalidOperand : public SymmetryError {
 public:
  using SymmetryError::SymmetryError;
};

}  // namespace jetsym
