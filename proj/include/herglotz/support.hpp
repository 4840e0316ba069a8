#pragma once

#include <optional>

#include "herglotz/common.hpp"
#include <vector>

namespace herglotz {

/// Where a function fails to extend continuously across the real line
/// (or the circle, in angle coordinates). Metadata only: it tells numerical
/// routines where to place breakpoints and which stretches are safe.
struct BoundarySupport {
  struct Interval {
    double lo, hi;  // either end may be +-inf
  };
  /// Points offset + k*period for all integers k.
  struct ArithmeticLattice {
    double offset, period;
  };
  /// Points base * ratio^k for all integers k (ratio > 1), on the positive axis.
  struct GeometricLattice {
    double base, ratio;
  };

  std::vector<Interval> intervals;
  std::vector<double> points;
  bool infinity = false;
  std::optional<ArithmeticLattice> arithmetic;
  std::optional<GeometricLattice> geometric;

  /// Isolated support points (explicit and lattice) inside [lo, hi], sorted.
  [[nodiscard]] std::vector<double> points_in(double lo, double hi) const;
  /// Finite interval ends inside [lo, hi], sorted.
  [[nodiscard]] std::vector<double> interval_ends_in(double lo, double hi) const;
  /// Every singular location inside [lo, hi]: points plus interval ends.
  [[nodiscard]] std::vector<double> breakpoints_in(double lo, double hi) const;
  /// True if [lo, hi] meets the support (an open interval counts as touching
  /// only if it overlaps with positive length or the closed sets share a point).
  [[nodiscard]] bool meets(double lo, double hi) const;
  /// True if the support has infinitely many points, so any finite window
  /// captures only part of it.
  [[nodiscard]] bool is_unbounded_discrete() const {
    return arithmetic.has_value() || geometric.has_value();
  }
  /// Distance from x to the nearest support point or interval.
  [[nodiscard]] double distance(double x) const;
  /// Distance from x to the rest of the support, ignoring a point sitting at x
  /// itself. 0 when x lies in a support interval.
  [[nodiscard]] double isolation(double x) const;
};

}  // namespace herglotz
