#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "herglotz/common.hpp"

namespace herglotz {

/// Geometric sampling schedule y_k = y0 * ratio^k, k = 0..steps-1, for a limit
/// as y -> 0. `order` is the degree of the extrapolating polynomial.
struct LimitSchedule {
  double y0 = 0.5;
  double ratio = 0.5;
  int steps = 12;
  int order = 6;

  /// Throws DomainError unless y0 > 0, 0 < ratio < 1, steps >= 3,
  /// 1 <= order < steps and y0*ratio^steps > 1e-13.
  void validate() const;
  [[nodiscard]] std::vector<double> nodes() const;
  /// The same schedule started no higher than y0, with steps (and order)
  /// trimmed so the last height stays above the floor.
  [[nodiscard]] LimitSchedule starting_at(double y0) const;

  /// Boundary densities and functionals.
  static LimitSchedule line() { return {}; }
  /// Tangential limits y*f(x+iy) at an atom: coarser ratio keeps the pole
  /// offset well above rounding.
  static LimitSchedule atomic() { return {0.25, 0.25, 9, 6}; }
  /// Limits at infinity, sampled in eps = 1/y.
  static LimitSchedule infinity() { return {1.0, 1.0 / 16.0, 10, 4}; }
};

struct ExtrapolatedLimit {
  Complex value{};
  double error_estimate = 0.0;
  std::vector<std::pair<double, Complex>> sequence;  // (y, raw value)
  bool converged = false;

  /// Returns *this when converged, otherwise throws ConvergenceError naming `what`.
  const ExtrapolatedLimit& require(const std::string& what) const;
};

/// Default acceptance rule for a tableau: error <= rel * (1 + |value|).
inline constexpr double kTableauTolerance = 1e-4;

/// Neville extrapolation to y = 0 of the polynomial through the last order+1
/// samples. value is the top tableau entry; error is its distance to the entry
/// built from the same samples minus the coarsest one.
ExtrapolatedLimit extrapolate_to_zero(std::vector<std::pair<double, Complex>> samples, int order,
                                      double tol = kTableauTolerance);

/// Wynn epsilon (Shanks) transform of samples taken on a geometric schedule.
/// A term y^a becomes geometric in the sample index for any real a, so
/// fractional powers are removed where the polynomial fit leaves them.
/// error is the distance between the last two even-column estimates, and
/// infinite when the sample differences grow.
ExtrapolatedLimit extrapolate_geometric(std::vector<std::pair<double, Complex>> samples,
                                        double tol = kTableauTolerance);

/// Samples g on the schedule and extrapolates to 0.
ExtrapolatedLimit limit_at_zero(const std::function<Complex(double)>& g, const LimitSchedule& sched,
                                double tol = kTableauTolerance);

}  // namespace herglotz
