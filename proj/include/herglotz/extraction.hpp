#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "herglotz/extrapolation.hpp"
#include "herglotz/function.hpp"
#include "herglotz/quadrature.hpp"
#include "herglotz/test_function.hpp"

namespace herglotz {

/// Settings for the x-integrals taken at each fixed y.
quad::Options extraction_quadrature();

/// Breakpoints for x-integrals over [lo, hi] at height y: the function's
/// singular points in the range, each with a geometric grading of width y.
std::vector<double> boundary_breakpoints(const AnalyticFunction& f, double lo, double hi, double y);

/// lim_{y -> 0} of int test(x) (f(x+iy) - f(x-iy)) / (2 pi i (1+x^2)) dx.
/// The point at infinity carries no weight in this functional.
ExtrapolatedLimit extract_functional(const AnalyticFunction& f, const TestFunction& test,
                                     const LimitSchedule& sched = LimitSchedule::line());

/// lim_{y -> 0} (f(x+iy) - f(x-iy)) / (2 pi i (1+x^2)).
ExtrapolatedLimit density_at(const AnalyticFunction& f, double x,
                             const LimitSchedule& sched = LimitSchedule::line());

/// lim_{y -> 0} y f(x+iy) / (i (1+x^2)), with the schedule's starting height
/// reduced to half the distance from x to the rest of the boundary support.
ExtrapolatedLimit atomic_mass_limit(const AnalyticFunction& f, double x,
                                    const LimitSchedule& sched = LimitSchedule::atomic());
/// atomic_mass_limit's value; throws NonSimpleBehavior if the limit diverges.
Complex atomic_mass_at(const AnalyticFunction& f, double x,
                       const LimitSchedule& sched = LimitSchedule::atomic());

/// lim_{y -> inf} f(iy) / (i y), sampled in eps = 1/y.
ExtrapolatedLimit atomic_mass_limit_at_infinity(const AnalyticFunction& f,
                                                const LimitSchedule& sched = LimitSchedule::infinity());
Complex atomic_mass_at_infinity(const AnalyticFunction& f,
                                const LimitSchedule& sched = LimitSchedule::infinity());

/// Polar grid over the upper half-plane: radii log-spaced in [r_min, r_max],
/// angles uniform in (0, pi). Odd counts with r_min * r_max = 1 place a node at i.
struct PolarGrid {
  double r_min = 1e-4;
  double r_max = 1e4;
  int radii = 321;
  int angles = 181;
  bool refine = true;  // local pattern search around the best node
};

/// sup over the grid of (Im z / (1 + |z|^2)) |f(z)|.
double vladimirov_norm(const AnalyticFunction& f, const PolarGrid& grid = {});
/// (1 + sqrt 2)/2 * |f(i)|.
double vladimirov_bound(const AnalyticFunction& f);

struct SimpleScanReport {
  double lo = 0.0, hi = 0.0;
  bool at_infinity = false;   // scanned through the inversion chart near 0
  double sup_weighted = 0.0;  // max of (Im z/(1+|z|^2)) |f(z)| over the box
  double alpha = 0.0;         // fitted growth exponent: sup y|f| ~ y^{-alpha}
  bool bounded = true;
  std::vector<std::pair<double, double>> profile;  // (y, sup_x y |f(x +- iy)|)
  [[nodiscard]] std::string diagnosis() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Growth scan of y |f(x +- iy)| over x in [lo, hi], y in [y_floor, 1]. If
/// either end is infinite, the neighborhood of infinity is scanned instead:
/// the box around 0 in the chart z -> f(-1/z). The fit uses the lowest decade.
SimpleScanReport simple_scan(const AnalyticFunction& f, double lo, double hi, double y_floor = 1e-6,
                             int growth_order = 1);

/// int |f(x+iy) - f(x-iy)| / (1+x^2) dx over the line.
double boundary_norm(const AnalyticFunction& f, double y);

/// int 2y / ((1+x^2)((s-x)^2 + y^2)) dx by quadrature, and its residue value
/// 2 pi (y+1)/(s^2 + (y+1)^2).
double residue_identity_quadrature(double s, double y);
double residue_identity_closed_form(double s, double y);

}  // namespace herglotz
