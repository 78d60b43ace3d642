#ifndef QP_ERRORS_HPP
#define QP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad operands: division by zero, zero input where nonzero required, ...
struct InputError : Error {
  using Error::Error;
};

struct DivisionByZero : InputError {
  DivisionByZero() : InputError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : InputError(what) {}
};

struct ZeroInput : InputError {
  ZeroInput() : InputError("zero input") {}
  explicit ZeroInput(const std::string& what) : InputError(what) {}
};

struct DegreeTooLarge : InputError {
  explicit DegreeTooLarge(const std::string& what) : InputError(what) {}
};

struct UnsupportedPrime : InputError {
  explicit UnsupportedPrime(const std::string& what) : InputError(what) {}
};

struct BadPrime : Error {
  explicit BadPrime(const std::string& what) : Error(what) {}
};

struct SingularReduction : Error {
  explicit SingularReduction(const std::string& what) : Error(what) {}
};

// Root iteration did not settle at the current precision; callers escalate.
struct NonConvergence : Error {
  explicit NonConvergence(const std::string& what) : Error(what) {}
};

// The whole precision ladder was exhausted.
struct PrecisionExhausted : Error {
  explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

// Residue counting still admits more roots than were reconstructed.
struct IncompleteRoots : Error {
  explicit IncompleteRoots(const std::string& what) : Error(what) {}
};

// Square test failed both the reconstruction ladder and certificate primes.
struct Inconclusive : Error {
  explicit Inconclusive(const std::string& what) : Error(what) {}
};

struct NoGoodPrimes : Error {
  explicit NoGoodPrimes(const std::string& what) : Error(what) {}
};

struct TorsionBoundMismatch : Error {
  explicit TorsionBoundMismatch(const std::string& what) : Error(what) {}
};

}  // namespace qp

#endif
