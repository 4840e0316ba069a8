#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace herglotz {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised when an operation is asked to act outside its domain
/// (a branch cut, the boundary set of a function, an invalid parameter).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A limit or quadrature did not settle within its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The boundary behavior required by an operation does not hold:
/// (Im z)^m f(z) is not bounded near the boundary stretch in question.
class NonSimpleBehavior : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace herglotz
