#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bilattice {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (scalar or polynomial text, JSON documents).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Scalars from different quadratic extensions, or polynomials/functionals
/// built over different lattices, were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A precondition of the mathematics failed (non-admissible pair, singular
/// functional, vanishing denominator...). The CLI maps these to exit code 2.
class MathError : public Error {
 public:
  using Error::Error;
};

/// Indexed mathematical failure; `index()` is the n at which it happened.
class IndexedMathError : public MathError {
 public:
  IndexedMathError(const std::string& what, long index)
      : MathError(what + " at n=" + std::to_string(index)), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// A moment beyond the functional's truncation order was requested.
class TruncationError : public IndexedMathError {
 public:
  using IndexedMathError::IndexedMathError;
};

/// d_n = a n + d vanished.
class AdmissibilityError : public IndexedMathError {
 public:
  using IndexedMathError::IndexedMathError;
};

/// phi(-e_n/d_2n) + n d_n vanished, or a family coefficient C_n vanished
/// inside the requested range.
class RegularityError : public IndexedMathError {
 public:
  using IndexedMathError::IndexedMathError;
};

/// A family formula hit a zero denominator.
class DenominatorError : public IndexedMathError {
 public:
  using IndexedMathError::IndexedMathError;
};

/// A quantity expected to be free of (-1)^s carried a nonzero sigma part.
class SigmaResidueError : public IndexedMathError {
 public:
  using IndexedMathError::IndexedMathError;
};

}  // namespace bilattice
