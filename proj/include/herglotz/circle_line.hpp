#pragma once

#include <functional>

#include <json.hpp>

#include "herglotz/distribution.hpp"
#include "herglotz/extrapolation.hpp"
#include "herglotz/function.hpp"
#include "herglotz/test_function.hpp"

namespace herglotz {

/// r_k = 1 - y0 * ratio^k, extrapolated in 1 - r.
inline LimitSchedule circle_schedule() { return {0.5, 0.5, 8, 5}; }

/// mu_r(f) = int_{-pi}^{pi} f(t) (phi(r e^{it}) - phi(e^{it}/r)) / 2 dt for a
/// disc-picture phi and a test f in the angle variable. Tests whose support
/// covers the full period go through the periodic trapezoid rule; arcs and
/// stubborn integrands through adaptive quadrature graded at singular angles.
Complex circle_measure_functional(const AnalyticFunction& phi, double r, const TestFunction& f);

/// lim_{r -> 1} mu_r(f).
ExtrapolatedLimit circle_limit(const AnalyticFunction& phi, const TestFunction& f,
                               const LimitSchedule& sched = circle_schedule());

/// Two extrapolated limits that should agree. The circle side's sequence is
/// indexed by 1 - r; for the inversion duality both sides are line limits and
/// `circle` holds the direct pairing.
struct GapReport {
  ExtrapolatedLimit circle;
  ExtrapolatedLimit line;
  bool circle_is_line = false;
  [[nodiscard]] double gap() const { return std::abs(circle.value - line.value); }
  /// {"circle":[re,im],"line":[re,im],"gap":g,"r_sequence":[[r,re,im],...],
  ///  "y_sequence":[[y,re,im],...]}; with circle_is_line the first sequence is
  /// "direct_y_sequence" instead.
  [[nodiscard]] nlohmann::json to_json() const;
};

/// lim_{r -> 1} int_{-alpha}^{alpha} test(tan(t/2)) phi(r e^{it}) dt against
/// -i lim_{y -> 0} int test(s) f(s + iy) 2/(1+s^2) ds, phi the disc picture of f.
/// The lower side pairs e^{it}/r with s - iy.
GapReport consistency_gap(const AnalyticFunction& f, const TestFunction& test, Side side = Side::upper,
                          const LimitSchedule& circle = circle_schedule(),
                          const LimitSchedule& line = LimitSchedule::line());

/// int test(x) f(x +- i0)/(1+x^2) dx against the same pairing of test(-1/x)
/// with f(-1/z). The test support must avoid 0.
GapReport inversion_duality_gap(const AnalyticFunction& f, const TestFunction& test, Side side = Side::upper,
                                const LimitSchedule& line = LimitSchedule::line());

/// Full-period circle pairing int test(tan(t/2)) phi(e^{it -+ 0}) dt against
/// the line pairing -i int test(s) f(s +- i0) 2/(1+s^2) ds, the line split at
/// +-1 with the inversion chart beyond. test must be continuous on the
/// extended line: a bounded support, or an unbounded one with a value at infinity.
GapReport joined_distribution_check(const AnalyticFunction& f, const TestFunction& test, Side side = Side::upper,
                                    const LimitSchedule& circle = circle_schedule(),
                                    const LimitSchedule& line = LimitSchedule::line());

}  // namespace herglotz
