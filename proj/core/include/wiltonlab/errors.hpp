#pragma once

#include <stdexcept>
#include <string>

#include "wiltonlab/types.hpp"

namespace wiltonlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Argument lies on (or within the guard radius of) a pole.
class PoleAt : public Error {
 public:
  PoleAt(const std::string& what, Complex where) : Error(what), where_(where) {}
  Complex where() const noexcept { return where_; }
  const char* kind() const noexcept override { return "PoleAt"; }

 private:
  Complex where_;
};

/// Regularized Bessel moment evaluated too close to u = k + m.
class PoleProximity : public Error {
 public:
  PoleProximity(const std::string& what, int m) : Error(what), m_(m) {}
  int index() const noexcept { return m_; }
  const char* kind() const noexcept override { return "PoleProximity"; }

 private:
  int m_;
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

class OutOfRange : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "OutOfRange"; }
};

/// An adaptive computation stopped before reaching its tolerance. Carries the
/// best value found and its error estimate.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(const std::string& what, Complex best, double estimate)
      : Error(what), best_(best), estimate_(estimate) {}
  Complex best() const noexcept { return best_; }
  double estimate() const noexcept { return estimate_; }
  const char* kind() const noexcept override { return "ToleranceNotMet"; }

 private:
  Complex best_;
  double estimate_;
};

class ContourTooClose : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ContourTooClose"; }
};

class TailBoundFailed : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "TailBoundFailed"; }
};

class TailTooLarge : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "TailTooLarge"; }
};

/// Requested working precision exceeds what the extended-precision path supports.
class PrecisionLimit : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "PrecisionLimit"; }
};

}  // namespace wiltonlab
