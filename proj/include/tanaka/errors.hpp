#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tanaka {

// Mathematical rejection of well-formed input (CLI exit code 2).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Malformed document / schema problem (CLI exit code 3).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

inline ValidationError grading_violation(int i, int j, const std::string& detail) {
  return ValidationError("GradingViolation",
                         "[g^" + std::to_string(i) + ", g^" + std::to_string(j) +
                             "] leaves its degree: " + detail);
}

inline ValidationError jacobi_violation(const std::string& triple, const std::string& residual) {
  return ValidationError("JacobiViolation",
                         "Jacobi fails on (" + triple + "), residual " + residual);
}

}  // namespace tanaka
