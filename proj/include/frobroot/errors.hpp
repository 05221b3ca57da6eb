#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frob {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different ring contexts were mixed.
class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

/// Expression text did not conform to the polynomial grammar.
/// position() is the 1-based offset into the expression string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A monomial exponent left the supported range (2^31 - 1).
class ExponentOverflowError : public Error {
 public:
  using Error::Error;
};

/// Invalid user input (job files, ring parameters, algebra data).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The supplied u does not lie in (J^[p] : J) ∩ (Omega^[p] : Omega).
class NotInModuleError : public Error {
 public:
  using Error::Error;
};

/// The chart cover ideals do not sum to the unit ideal; the Frobenius-map
/// module is not locally principal everywhere, so the input violates the
/// Cohen-Macaulay-domain / canonical-ideal hypotheses.
class CoverIncompleteError : public Error {
 public:
  using Error::Error;
};

/// A query needed a stabilized chain but the bound was reached first.
class NoStabilizationError : public Error {
 public:
  using Error::Error;
};

/// Violated internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace frob
