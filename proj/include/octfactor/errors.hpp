#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octfactor {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse requested for an element of norm zero.
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

/// Operands built over different algebras (or of different dimension).
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class EqualRoots : public Error {
 public:
  using Error::Error;
};

/// The companion polynomial does not split into representable quadratics.
class NotDecomposable : public Error {
 public:
  using Error::Error;
};

class NoRootInClass : public Error {
 public:
  using Error::Error;
};

class WitnessNotFound : public Error {
 public:
  using Error::Error;
};

/// Factorization over Q refused because the degree exceeds the configured cap.
class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// conj(f)*f produced a non-central coefficient. Indicates a bug.
class NonCentralResult : public Error {
 public:
  using Error::Error;
};

/// A computed factorization failed its own re-expansion check. Indicates a bug.
class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace octfactor
