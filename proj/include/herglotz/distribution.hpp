#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "herglotz/function.hpp"
#include "herglotz/test_function.hpp"

namespace herglotz {

enum class Side { upper, lower };

/// h on [a, b] with h'' = H and h(a) = h(b) = 0:
///   h'(x) = int_a^x H - (1/(b-a)) int_a^b (b-t) H(t) dt
///   h(x)  = int_a^x (x-t) H(t) dt - ((x-a)/(b-a)) int_a^b (b-t) H(t) dt
/// h(b) is exactly 0 because both moments go through the same quadrature.
class C02Function {
 public:
  C02Function(std::function<Complex(double)> H, double a, double b);

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] Complex h(double x) const;
  [[nodiscard]] Complex dh(double x) const;
  [[nodiscard]] Complex H(double x) const { return (*H_)(x); }

  /// The same construction applied to conj(H).
  [[nodiscard]] C02Function conj() const;
  /// h as a test function on [a, b] with derivatives up to order 2.
  [[nodiscard]] TestFunction as_test_function() const;

 private:
  Complex moment(double x) const;  // int_a^x (x-t) H(t) dt
  std::shared_ptr<const std::function<Complex(double)>> H_;
  double a_, b_;
  Complex J_;  // int_a^b (b-t) H(t) dt
};

C02Function normalized_antiderivative(std::function<Complex(double)> H, double a, double b);

/// G(x) = int_0^delta t^m f(x +- it) dt, an improper integral with a bounded
/// integrand when y^m f is bounded.
Complex cutoff_moment(const AnalyticFunction& f, double x, double delta, int m = 1, Side side = Side::upper);

/// lim_{y -> 0} int h(x) f(x +- iy) dx by the four-term identity with cutoff delta.
/// The lower side is computed as conj of the upper side of f* against conj h.
Complex boundary_functional(const AnalyticFunction& f, const C02Function& h, double delta,
                            Side side = Side::upper);

/// Samples of Phi on [a, b]: Phi is evaluated on sigmoidally graded Chebyshev
/// nodes on each piece between interior singular points of f, and read back by
/// barycentric interpolation.
class PhiProfile {
 public:
  struct Piece {
    double lo, hi;
    std::vector<double> u;     // Chebyshev points of the second kind in [-1, 1]
    std::vector<double> t;     // graded nodes in [lo, hi]
    std::vector<Complex> phi;  // Phi(t)
  };

  PhiProfile(double a, double b, double delta, std::vector<Piece> pieces, int grading)
      : a_(a), b_(b), delta_(delta), pieces_(std::move(pieces)), grading_(grading) {}

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] double delta() const { return delta_; }
  [[nodiscard]] const std::vector<Piece>& pieces() const { return pieces_; }
  /// Interpolated Phi(t).
  [[nodiscard]] Complex operator()(double t) const;
  /// "t,re,im" rows with a header, nodes in increasing order.
  [[nodiscard]] std::string to_csv() const;

  /// The graded map from u in [-1, 1] onto [lo, hi].
  static double graded_node(double u, double lo, double hi, int grading);
  static double graded_node_derivative(double u, double lo, double hi, int grading);

  /// Largest gap between the interpolant and direct evaluation at the
  /// midpoints (in u) of a few node pairs per piece; filled by phi_profile.
  double interpolation_check = 0.0;

 private:
  double a_, b_, delta_;
  std::vector<Piece> pieces_;
  int grading_;
};

/// Phi(t) = T1 - T2 + T3 + T4 - T5 with
///   T1 = int_t^b (x + i delta - t) f(x + i delta) dx
///   T2 = ((b-t)/(b-a)) int_a^b (x + i delta - a) f(x + i delta) dx
///   T3 = ((t-a)/(b-a)) G(b),  T4 = ((b-t)/(b-a)) G(a),  T5 = G(t)
/// for the upper side, G as in cutoff_moment with m = 1.
Complex phi_value(const AnalyticFunction& f, double a, double b, double delta, double t);

/// Profile with `nodes` Chebyshev points per piece (at least 9).
PhiProfile phi_profile(const AnalyticFunction& f, double a, double b, double delta, int nodes = 129);

/// int_a^b H(t) Phi(t) dt through the profile's interpolant. Throws DomainError
/// when the intervals differ.
Complex pair_with_phi(const PhiProfile& profile, const C02Function& h);

/// The order-m distributional limit int test(x) f(x +- i0) dx:
///   sum_{k=0}^m ((+-i delta)^k / k!) int test^(k)(x) f(x +- i delta) dx
///   + ((+-i)^{m+1} / m!) int test^(m+1)(x) int_0^delta t^m f(x +- it) dt dx
/// over [a, b]. Throws NonSimpleBehavior when the growth of f near the box
/// exceeds y^-m, DomainError when m is outside [0, 4].
Complex boundary_limit_order_m(const AnalyticFunction& f, const TestFunction& test, double a, double b,
                               double delta, int m, Side side = Side::upper);

}  // namespace herglotz
