#pragma once

#include <utility>
#include <vector>

#include "herglotz/common.hpp"

namespace herglotz {

/// A point of the Riemann sphere: either a finite complex number or the
/// point at infinity.
class ComplexPoint {
 public:
  constexpr ComplexPoint() = default;
  constexpr ComplexPoint(double re, double im) : value_(re, im) {}
  constexpr ComplexPoint(Complex z) : value_(z) {}  // NOLINT(implicit)

  static constexpr ComplexPoint infinity() {
    ComplexPoint p;
    p.infinite_ = true;
    return p;
  }

  [[nodiscard]] constexpr bool is_infinity() const { return infinite_; }
  [[nodiscard]] constexpr bool is_finite() const { return !infinite_; }

  /// The finite value; throws DomainError at infinity.
  [[nodiscard]] Complex value() const;
  [[nodiscard]] double re() const { return value().real(); }
  [[nodiscard]] double im() const { return value().imag(); }

  friend bool operator==(const ComplexPoint& a, const ComplexPoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  Complex value_{};
  bool infinite_ = false;
};

/// Real invertible 2x2 matrix acting on the sphere by z -> (az+b)/(cz+d).
/// The determinant is kept as given (no normalization to +-1).
class MobiusMatrix {
 public:
  MobiusMatrix(double a, double b, double c, double d);

  static MobiusMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static MobiusMatrix translation(double shift) { return {1.0, shift, 0.0, 1.0}; }
  static MobiusMatrix dilation(double factor) { return {factor, 0.0, 0.0, 1.0}; }
  /// z -> -1/z
  static MobiusMatrix inversion() { return {0.0, -1.0, 1.0, 0.0}; }

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] double c() const { return c_; }
  [[nodiscard]] double d() const { return d_; }
  [[nodiscard]] double det() const { return a_ * d_ - b_ * c_; }

  /// Adjugate; acts on the sphere as the inverse map.
  [[nodiscard]] MobiusMatrix inverse() const;

  friend MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y);

 private:
  double a_, b_, c_, d_;
};

/// (az+b)/(cz+d) with sphere conventions: infinity -> a/c, cz+d = 0 -> infinity.
ComplexPoint mobius_apply(const MobiusMatrix& A, const ComplexPoint& z);

/// Real-line specialization; t may be +-inf for the point at infinity. When the
/// image is the point at infinity, returns +inf and sets `at_infinity`.
double mobius_apply_real(const MobiusMatrix& A, double t, bool* at_infinity = nullptr);

/// Image of the real interval [lo, hi] (ends may be infinite) under B, as one
/// or two intervals; two when the preimage of infinity lies strictly inside.
/// Each returned interval has lo <= hi.
std::vector<std::pair<double, double>> mobius_image_interval(const MobiusMatrix& B, double lo,
                                                             double hi);

/// Half-plane -> disc: z = (i - w)/(i + w).
ComplexPoint cayley_to_disc(const ComplexPoint& w);
/// Disc -> half-plane: w = i(1 - z)/(1 + z).
ComplexPoint cayley_to_halfplane(const ComplexPoint& z);

/// Rotation of the disc coordinate by theta, seen in the half-plane picture:
/// [[cos(theta/2), sin(theta/2)], [-sin(theta/2), cos(theta/2)]].
MobiusMatrix disc_rotation_matrix(double theta);

}  // namespace herglotz
