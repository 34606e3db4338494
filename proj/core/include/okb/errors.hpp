#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace okb {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (e.g. asked for the Zariski
// decomposition of a class that is not pseudoeffective).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The surface model itself is malformed or inconsistent.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Textual input (rationals, class expressions, model files) failed to parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation requires the pairwise intersection condition
// (N1.N2)^2 >= N1^2 * N2^2 for meeting negative curves, and the model
// violates it; carries one violating pair of curve indices.
class StarViolationError : public Error {
 public:
  StarViolationError(const std::string& what, int first, int second)
      : Error(what), pair_(first, second) {}
  std::pair<int, int> witness() const { return pair_; }

 private:
  std::pair<int, int> pair_;
};

// An internal invariant failed.  Indicates a bug or a model whose data is
// not realizable by any actual surface.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace okb
