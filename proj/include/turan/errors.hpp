#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients violate α₀ = 0, αₙ₊₁ > 0, γₙ > 0 (or a declared structural
/// property such as symmetry) at index `n`.
class InvalidSequence : public Error {
 public:
  InvalidSequence(std::size_t n, const std::string& what)
      : Error("invalid coefficient sequence at n=" + std::to_string(n) + ": " +
              what),
        index(n) {}
  std::size_t index;
};

/// A finite coefficient table was queried past its last entry.
class HorizonError : public Error {
 public:
  HorizonError(std::size_t n, std::size_t horizon)
      : Error("coefficient index " + std::to_string(n) +
              " is beyond the sequence horizon " + std::to_string(horizon)),
        index(n),
        horizon(horizon) {}
  std::size_t index;
  std::size_t horizon;
};

/// The forward recurrence produced a non-finite value at degree `n`.
class EvaluationOverflow : public Error {
 public:
  EvaluationOverflow(std::size_t n, double x)
      : Error("non-finite polynomial value at degree " + std::to_string(n) +
              " (x=" + std::to_string(x) + ")"),
        degree(n),
        x(x) {}
  std::size_t degree;
  double x;
};

/// Endpoint values pₙ(1) vanish or change sign, so the polynomials cannot be
/// normalized at x = 1.
class NormalizationError : public Error {
 public:
  NormalizationError(std::size_t n, const std::string& what)
      : Error("cannot normalize at x=1 (n=" + std::to_string(n) + "): " + what),
        index(n) {}
  std::size_t index;
};

/// An operation was called on input outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Family parameters outside their admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace turan
