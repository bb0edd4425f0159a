#pragma once

#include <stdexcept>
#include <string>

namespace morselab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, word strings, CSV).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input lies outside the hypotheses of the theorem a classifier implements.
class ScopeError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// A subgroup distance could not be certified exact inside the current ball.
class Unresolved : public Error {
 public:
  using Error::Error;
};

/// Ball enumeration stopped because the element budget would be exceeded.
/// `completed_radius()` is the last BFS layer that was fully built.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int completed_radius, std::size_t elements, const std::string& what)
      : Error(what), completed_radius_(completed_radius), elements_(elements) {}

  int completed_radius() const noexcept { return completed_radius_; }
  std::size_t elements() const noexcept { return elements_; }

 private:
  int completed_radius_;
  std::size_t elements_;
};

}  // namespace morselab
