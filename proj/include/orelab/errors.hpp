#pragma once

#include <stdexcept>
#include <string>

namespace orelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite operation table fails a ring law; `what()` names the law and the
/// offending tuple.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string law, std::string witness)
      : Error("axiom violation (" + law + "): " + witness),
        law_(std::move(law)),
        witness_(std::move(witness)) {}

  const std::string& law() const noexcept { return law_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string law_;
  std::string witness_;
};

class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class NotADerivation : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive procedure is asked to run on a ring without a
/// finite carrier.
class NotEnumerable : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class BoundTooLarge : public Error {
 public:
  using Error::Error;
};

class WorkCapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

}  // namespace orelab
