#pragma once

#include <stdexcept>
#include <string>

namespace wdsmooth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed or inadmissible input (bad Dynkin type, bad partition, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

/// The request is well formed but outside the data this library carries.
class UnsupportedType : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported"; }
};

/// An operation precondition does not hold (e.g. l | q, p <= n for exp).
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// Enumeration would exceed the configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget"; }
};

/// A constructed singularity certificate failed one of its own checks.
class CertificateInvalid : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "certificate-invalid"; }
};

}  // namespace wdsmooth
