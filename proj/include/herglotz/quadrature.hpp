#pragma once

#include <functional>
#include <vector>

#include "herglotz/common.hpp"

namespace herglotz::quad {

using Integrand = std::function<Complex(double)>;

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_intervals = 4000;  // adaptive Gauss-Kronrod panel budget
  int max_level = 12;        // double-exponential refinement levels
};

struct Result {
  Complex value{};
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;

  Result& operator+=(const Result& other) {
    value += other.value;
    error += other.error;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
  }
};

/// Globally adaptive 7/15-point Gauss-Kronrod on a finite interval.
Result gauss_kronrod(const Integrand& f, double a, double b, const Options& opts = {});

/// Tanh-sinh rule on a finite interval; tolerates integrable endpoint singularities.
/// Nodes that round onto an endpoint are skipped.
Result tanh_sinh(const Integrand& f, double a, double b, const Options& opts = {});

/// Exp-sinh rule on [a, +inf) (direction = +1) or (-inf, a] (direction = -1).
/// Handles algebraic decay at infinity and a singularity at a.
Result exp_sinh(const Integrand& f, double a, int direction, const Options& opts = {});

enum class Rule {
  gauss_kronrod,  // every finite segment by adaptive Gauss-Kronrod
  tanh_sinh,      // every finite segment by tanh-sinh
  mixed,          // tanh-sinh on the two outermost finite segments, Gauss-Kronrod inside
};

/// Integral over [lo, hi] where either end may be infinite. The range is split
/// at the given breakpoints (those outside (lo, hi) are ignored); infinite end
/// segments use exp-sinh.
Result integrate(const Integrand& f, double lo, double hi, std::vector<double> breakpoints = {},
                 const Options& opts = {}, Rule rule = Rule::gauss_kronrod);

/// Geometrically graded breakpoints x0 +- d*2^k (k >= 0) inside (lo, hi), plus x0
/// itself, stopping once the offset exceeds `reach`. Resolves integrands that
/// peak with width d around x0.
std::vector<double> graded_breakpoints(double x0, double d, double lo, double hi, double reach);

/// Equispaced trapezoid sum over one period [-pi, pi) with n nodes.
Complex periodic_trapezoid(const std::function<Complex(double)>& f, int n);

struct PeriodicResult {
  Complex value{};
  double error = 0.0;
  int nodes = 0;
  bool converged = false;
};

/// Trapezoid rule over [-pi, pi) with node doubling from n_min until two
/// successive sums agree to tol or n_max is reached.
PeriodicResult periodic_integral(const std::function<Complex(double)>& f, double tol,
                                 int n_min = 64, int n_max = 8192);

}  // namespace herglotz::quad
