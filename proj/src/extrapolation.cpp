#include "herglotz/extrapolation.hpp"

#include <cmath>

namespace herglotz {

void LimitSchedule::validate() const {
  if (!(y0 > 0.0) || !std::isfinite(y0)) throw DomainError("schedule: y0 must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw DomainError("schedule: ratio must lie in (0,1)");
  if (steps < 3) throw DomainError("schedule: at least 3 steps required");
  if (order < 1 || order >= steps) throw DomainError("schedule: order must lie in [1, steps)");
  if (!(y0 * std::pow(ratio, steps) > 1e-13))
    throw DomainError("schedule: y0*ratio^steps falls below the 1e-13 floor");
}

LimitSchedule LimitSchedule::starting_at(double y0) const {
  LimitSchedule s = *this;
  s.y0 = std::min(s.y0, y0);
  while (s.steps > 3 && s.y0 * std::pow(s.ratio, s.steps) <= 1e-13) --s.steps;
  s.order = std::min(s.order, s.steps - 1);
  return s;
}

std::vector<double> LimitSchedule::nodes() const {
  std::vector<double> ys(steps);
  double y = y0;
  for (int k = 0; k < steps; ++k, y *= ratio) ys[k] = y;
  return ys;
}

const ExtrapolatedLimit& ExtrapolatedLimit::require(const std::string& what) const {
  if (!converged) {
    throw ConvergenceError(what + ": limit did not settle (value " + std::to_string(value.real()) +
                           (value.imag() < 0 ? "" : "+") + std::to_string(value.imag()) +
                           "i, error estimate " + std::to_string(error_estimate) + ")");
  }
  return *this;
}

ExtrapolatedLimit extrapolate_to_zero(std::vector<std::pair<double, Complex>> samples, int order,
                                      double tol) {
  ExtrapolatedLimit out;
  out.sequence = std::move(samples);
  const int n = static_cast<int>(out.sequence.size());
  if (n == 0) return out;
  const int m = std::min(order + 1, n);
  const int first = n - m;

  std::vector<double> y(m);
  std::vector<Complex> p(m);
  for (int i = 0; i < m; ++i) {
    y[i] = out.sequence[first + i].first;
    p[i] = out.sequence[first + i].second;
  }
  if (m == 1) {
    out.value = p[0];
    out.error_estimate = kInf;
    return out;
  }
  // After pass k, p[i] holds the interpolant through samples i..i+k evaluated at 0.
  for (int k = 1; k < m; ++k) {
    for (int i = 0; i + k < m; ++i) {
      const double yi = y[i], yk = y[i + k];
      p[i] = (yk * p[i] - yi * p[i + 1]) / (yk - yi);
    }
  }
  // p[0] covers all samples; p[1] (left from pass m-2) covers samples 1..m-1.
  out.value = p[0];
  out.error_estimate = std::abs(p[0] - p[1]);
  out.converged = std::isfinite(out.error_estimate) && out.error_estimate <= tol * (1.0 + std::abs(out.value));
  return out;
}

ExtrapolatedLimit extrapolate_geometric(std::vector<std::pair<double, Complex>> samples, double tol) {
  ExtrapolatedLimit out;
  out.sequence = std::move(samples);
  const std::size_t n = out.sequence.size();
  if (n == 0) return out;
  if (n >= 3) {
    // a growing tail has an antilimit, not a limit
    const auto diff = [&](std::size_t i) { return std::abs(out.sequence[i + 1].second - out.sequence[i].second); };
    if (diff(n - 2) > diff(n - 3) || diff(n - 2) > diff(0)) {
      out.value = out.sequence.back().second;
      out.error_estimate = kInf;
      return out;
    }
  }
  std::vector<Complex> prev(n, Complex{}), cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = out.sequence[i].second;
  // even columns hold the estimates; keep the bottom entry of the last two
  Complex best = cur[n - 1], before = n > 1 ? cur[n - 2] : cur[n - 1];
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Complex> next(n - k);
    bool stalled = false;
    for (std::size_t i = 0; i + k < n; ++i) {
      const Complex d = cur[i + 1] - cur[i];
      if (std::abs(d) <= 1e-300) {
        stalled = true;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / d;
    }
    if (stalled) break;
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) {
      before = best;
      best = cur.back();
    }
  }
  out.value = best;
  out.error_estimate = n > 2 ? std::abs(best - before) : kInf;
  out.converged = std::isfinite(out.error_estimate) && out.error_estimate <= tol * (1.0 + std::abs(out.value));
  return out;
}

ExtrapolatedLimit limit_at_zero(const std::function<Complex(double)>& g, const LimitSchedule& sched,
                                double tol) {
  sched.validate();
  std::vector<std::pair<double, Complex>> samples;
  for (double y : sched.nodes()) samples.emplace_back(y, g(y));
  return extrapolate_to_zero(std::move(samples), sched.order, tol);
}

}  // namespace herglotz
