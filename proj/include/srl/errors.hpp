#pragma once

#include <stdexcept>
#include <string>

namespace srl {

/// Root of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables of the wrong shape, entries out of range, or a meet table that is
/// not a semilattice operation.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

class NotResiduated : public Error {
 public:
  NotResiduated(std::size_t b, std::size_t c)
      : Error("no greatest a with a*" + std::to_string(b) +
              " <= " + std::to_string(c)),
        b(b),
        c(c) {}
  std::size_t b;
  std::size_t c;
};

/// A theorem that must hold for every valid input failed. Always a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class DerivedLawFailure : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class WrongSignature : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  using Error::Error;
};

class NotAFilter : public Error {
 public:
  using Error::Error;
};

class NotBrouwerian : public Error {
 public:
  using Error::Error;
};

class NoTop : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class HypothesesNotMet : public Error {
 public:
  HypothesesNotMet(std::string hypothesis)
      : Error("hypothesis not met: " + hypothesis),
        hypothesis(std::move(hypothesis)) {}
  std::string hypothesis;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace srl
