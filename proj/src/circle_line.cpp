#include "herglotz/circle_line.hpp"

#include <algorithm>
#include <cmath>

#include "herglotz/extraction.hpp"
#include "herglotz/parallel.hpp"
#include "herglotz/quadrature.hpp"

namespace herglotz {
namespace {

const Complex I(0.0, 1.0);

quad::Options angular_options() {
  quad::Options o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-11;
  o.max_intervals = 8000;
  return o;
}

// Singular angles of a disc-picture function inside [lo, hi], graded at scale eps.
std::vector<double> angular_breakpoints(const AnalyticFunction& phi, double lo, double hi, double eps) {
  std::vector<double> sing = phi.support().breakpoints_in(-kPi, kPi);
  // pi and -pi are the same point of the circle
  if (std::find(sing.begin(), sing.end(), kPi) != sing.end()) sing.push_back(-kPi);
  std::vector<double> out;
  const double reach = std::min(1.0, hi - lo);
  for (double s : sing) {
    if (s < lo - reach || s > hi + reach) continue;
    auto g = quad::graded_breakpoints(s, eps, lo, hi, reach);
    out.insert(out.end(), g.begin(), g.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// int_lo^hi g(t) dt; over a full period the trapezoid rule is tried first.
Complex angular_integral(const AnalyticFunction& phi, const std::function<Complex(double)>& g, double lo,
                         double hi, double eps) {
  const bool full = lo <= -kPi && hi >= kPi;
  lo = std::max(lo, -kPi);
  hi = std::min(hi, kPi);
  if (full) {
    const quad::PeriodicResult p = quad::periodic_integral(g, 1e-12, 64, 1 << 15);
    if (p.converged) return p.value;
  }
  return quad::integrate(g, lo, hi, angular_breakpoints(phi, lo, hi, eps), angular_options()).value;
}

void require_disc(const AnalyticFunction& phi, const char* what) {
  if (phi.picture() != Picture::disc) throw DomainError(std::string(what) + ": disc picture required");
}

// lim_{eps -> 0} of sample(eps), sampled in parallel on the schedule.
ExtrapolatedLimit parallel_limit(const std::function<Complex(double)>& sample, const LimitSchedule& sched) {
  sched.validate();
  const std::vector<double> xs = sched.nodes();
  std::vector<Complex> values(xs.size());
  parallel_for(xs.size(), [&](std::size_t k) { values[k] = sample(xs[k]); });
  std::vector<std::pair<double, Complex>> samples;
  for (std::size_t k = 0; k < xs.size(); ++k) samples.emplace_back(xs[k], values[k]);
  return extrapolate_to_zero(std::move(samples), sched.order);
}

// lim_{y -> 0} int_lo^hi w(x) f(x +- iy) dx.
ExtrapolatedLimit line_limit(const AnalyticFunction& f, const std::function<Complex(double)>& w, double lo,
                             double hi, Side side, const LimitSchedule& sched) {
  if (f.picture() != Picture::half_plane) throw DomainError("line pairing: half-plane picture required");
  const double sgn = side == Side::upper ? 1.0 : -1.0;
  return parallel_limit(
      [&](double y) {
        auto integrand = [&](double x) -> Complex {
          const Complex wx = w(x);
          if (wx == Complex{}) return {};
          return wx * f(Complex(x, sgn * y));
        };
        return quad::integrate(integrand, lo, hi, boundary_breakpoints(f, lo, hi, y), extraction_quadrature())
            .value;
      },
      sched);
}

// Point on the circle side: r e^{it} pairs with the upper side, e^{it}/r with the lower.
Complex circle_point(double r, double t, Side side) {
  const Complex u = std::polar(1.0, t);
  return side == Side::upper ? r * u : u / r;
}

// test(tan(t/2)), with t = +-pi read as the point at infinity.
Complex test_on_circle(const TestFunction& test, double t) {
  if (std::abs(t) >= kPi) return test(kInf);
  return test(std::tan(0.5 * t));
}

nlohmann::json sequence_json(const ExtrapolatedLimit& lim, bool as_radius) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [x, v] : lim.sequence) out.push_back({as_radius ? 1.0 - x : x, v.real(), v.imag()});
  return out;
}

}  // namespace

Complex circle_measure_functional(const AnalyticFunction& phi, double r, const TestFunction& f) {
  require_disc(phi, "circle_measure_functional");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("circle_measure_functional: r must lie in (0, 1)");
  auto g = [&](double t) -> Complex {
    const Complex ft = f(t);
    if (ft == Complex{}) return {};
    const Complex u = std::polar(1.0, t);
    return ft * 0.5 * (phi(r * u) - phi(u / r));
  };
  return angular_integral(phi, g, f.lo(), f.hi(), 1.0 - r);
}

ExtrapolatedLimit circle_limit(const AnalyticFunction& phi, const TestFunction& f, const LimitSchedule& sched) {
  require_disc(phi, "circle_limit");
  return parallel_limit([&](double eps) { return circle_measure_functional(phi, 1.0 - eps, f); }, sched);
}

nlohmann::json GapReport::to_json() const {
  nlohmann::json j;
  j["circle"] = {circle.value.real(), circle.value.imag()};
  j["line"] = {line.value.real(), line.value.imag()};
  j["gap"] = gap();
  j[circle_is_line ? "direct_y_sequence" : "r_sequence"] = sequence_json(circle, !circle_is_line);
  j["y_sequence"] = sequence_json(line, false);
  return j;
}

GapReport consistency_gap(const AnalyticFunction& f, const TestFunction& test, Side side,
                          const LimitSchedule& circle, const LimitSchedule& line) {
  if (!std::isfinite(test.lo()) || !std::isfinite(test.hi()))
    throw DomainError("consistency_gap: the test needs a bounded support");
  const AnalyticFunction phi = disc_picture(f);
  const double alo = 2.0 * std::atan(test.lo()), ahi = 2.0 * std::atan(test.hi());

  GapReport report;
  report.circle = parallel_limit(
      [&](double eps) {
        const double r = 1.0 - eps;
        auto g = [&](double t) -> Complex {
          const Complex v = test(std::tan(0.5 * t));
          if (v == Complex{}) return {};
          return v * phi(circle_point(r, t, side));
        };
        return angular_integral(phi, g, alo, ahi, eps);
      },
      circle);
  report.line = line_limit(
      f, [&](double s) { return -I * test(s) * 2.0 / (1.0 + s * s); }, test.lo(), test.hi(), side, line);
  report.circle.require("circle side of the consistency identity");
  report.line.require("line side of the consistency identity");
  return report;
}

GapReport inversion_duality_gap(const AnalyticFunction& f, const TestFunction& test, Side side,
                                const LimitSchedule& line) {
  if (!std::isfinite(test.lo()) || !std::isfinite(test.hi()))
    throw DomainError("inversion_duality_gap: the test needs a bounded support");
  const TestFunction dual = test.inverted();
  const AnalyticFunction g = invert_variable(f);

  GapReport report;
  report.circle_is_line = true;
  report.circle =
      line_limit(f, [&](double x) { return test(x) / (1.0 + x * x); }, test.lo(), test.hi(), side, line);
  report.line =
      line_limit(g, [&](double x) { return dual(x) / (1.0 + x * x); }, dual.lo(), dual.hi(), side, line);
  report.circle.require("direct side of the inversion duality");
  report.line.require("inverted side of the inversion duality");
  return report;
}

GapReport joined_distribution_check(const AnalyticFunction& f, const TestFunction& test, Side side,
                                    const LimitSchedule& circle, const LimitSchedule& line) {
  const bool bounded = std::isfinite(test.lo()) && std::isfinite(test.hi());
  if (!bounded && !test.value_at_infinity())
    throw DomainError("joined_distribution_check: an unbounded test needs a value at infinity");
  const AnalyticFunction phi = disc_picture(f);
  const AnalyticFunction g = invert_variable(f);

  GapReport report;
  report.circle = parallel_limit(
      [&](double eps) {
        const double r = 1.0 - eps;
        auto integrand = [&](double t) -> Complex {
          const Complex v = test_on_circle(test, t);
          if (v == Complex{}) return {};
          return v * phi(circle_point(r, t, side));
        };
        return angular_integral(phi, integrand, -kPi, kPi, eps);
      },
      circle);

  // [-1, 1] directly, |s| > 1 through s = -1/u with the weight 2/(1+s^2) ds = 2/(1+u^2) du.
  const ExtrapolatedLimit inner =
      line_limit(f, [&](double s) { return test(s) * 2.0 / (1.0 + s * s); }, -1.0, 1.0, side, line);
  const ExtrapolatedLimit outer = line_limit(
      g, [&](double u) { return (u == 0.0 ? test(kInf) : test(-1.0 / u)) * 2.0 / (1.0 + u * u); }, -1.0, 1.0,
      side, line);
  report.line.value = -I * (inner.value + outer.value);
  report.line.error_estimate = inner.error_estimate + outer.error_estimate;
  report.line.converged = inner.converged && outer.converged;
  for (std::size_t k = 0; k < inner.sequence.size(); ++k)
    report.line.sequence.emplace_back(inner.sequence[k].first,
                                      -I * (inner.sequence[k].second + outer.sequence[k].second));
  report.circle.require("circle side of the joined distribution");
  report.line.require("line side of the joined distribution");
  return report;
}

}  // namespace herglotz
