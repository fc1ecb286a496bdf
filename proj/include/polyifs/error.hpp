#pragma once

#include <stdexcept>
#include <string>

namespace polyifs {

// Bad inputs: parameters out of range, digits outside [0, n), malformed angles.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidWord : public DomainError {
 public:
  using DomainError::DomainError;
};

class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required)
      : DomainError(what), required_(required) {}
  unsigned long long required() const { return required_; }

 private:
  unsigned long long required_;
};

class RequiresExactAngle : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotAFace : public DomainError {
 public:
  using DomainError::DomainError;
};

class AmbiguousTie : public std::runtime_error {
 public:
  explicit AmbiguousTie(const std::string& what) : std::runtime_error(what) {}
};

// A computed object contradicts the period/face structure it was built from.
class StructuralError : public std::logic_error {
 public:
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polyifs
