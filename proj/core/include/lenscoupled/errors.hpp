#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lenscoupled {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain an operation is defined on (non-finite argument,
/// point outside the focal zone, bad aperture, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Coincident points in a Green's tensor that diverges there.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A closed-form expression hits a pole for the given parameters.
class SingularParameterError : public Error {
 public:
  using Error::Error;
};

/// Division by a quantity that must be nonzero (n2, |G12|).
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// Collective decay matrix is not positive semidefinite (|Gamma12| > Gamma).
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

/// The Liouvillian null space is not one-dimensional.
class NumericalRankError : public Error {
 public:
  using Error::Error;
};

/// Successive quadrature refinements failed to agree.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> previous,
                   std::complex<double> last)
      : Error(what), previous_(previous), last_(last) {}

  std::complex<double> previous_estimate() const noexcept { return previous_; }
  std::complex<double> last_estimate() const noexcept { return last_; }

 private:
  std::complex<double> previous_;
  std::complex<double> last_;
};

}  // namespace lenscoupled
