#include "herglotz/geometry.hpp"

#include <cmath>

namespace herglotz {

Complex ComplexPoint::value() const {
  if (infinite_) throw DomainError("ComplexPoint: value() of the point at infinity");
  return value_;
}

MobiusMatrix::MobiusMatrix(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
    throw DomainError("MobiusMatrix: non-finite entry");
  if (det() == 0.0) throw DomainError("MobiusMatrix: singular matrix");
}

MobiusMatrix MobiusMatrix::inverse() const { return {d_, -b_, -c_, a_}; }

MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

ComplexPoint mobius_apply(const MobiusMatrix& A, const ComplexPoint& z) {
  if (z.is_infinity()) {
    if (A.c() == 0.0) return ComplexPoint::infinity();
    return ComplexPoint(Complex(A.a() / A.c(), 0.0));
  }
  const Complex w = z.value();
  const Complex den = A.c() * w + A.d();
  if (den == Complex(0.0, 0.0)) return ComplexPoint::infinity();
  return ComplexPoint((A.a() * w + A.b()) / den);
}

double mobius_apply_real(const MobiusMatrix& A, double t, bool* at_infinity) {
  if (at_infinity) *at_infinity = false;
  if (std::isinf(t)) {
    if (A.c() == 0.0) {
      if (at_infinity) *at_infinity = true;
      return kInf;
    }
    return A.a() / A.c();
  }
  const double den = A.c() * t + A.d();
  if (den == 0.0) {
    if (at_infinity) *at_infinity = true;
    return kInf;
  }
  return (A.a() * t + A.b()) / den;
}

std::vector<std::pair<double, double>> mobius_image_interval(const MobiusMatrix& B, double lo,
                                                             double hi) {
  std::vector<std::pair<double, double>> out;
  if (B.c() == 0.0) {
    double t1 = (B.a() * lo + B.b()) / B.d();
    double t2 = (B.a() * hi + B.b()) / B.d();
    if (t1 > t2) std::swap(t1, t2);
    out.emplace_back(t1, t2);
    return out;
  }
  const double pole = -B.d() / B.c();
  auto image = [&](double s) { return std::isinf(s) ? B.a() / B.c() : (B.a() * s + B.b()) / (B.c() * s + B.d()); };
  const bool increasing = B.det() > 0.0;
  if (!(pole >= lo && pole <= hi)) {
    double t1 = image(lo), t2 = image(hi);
    if (t1 > t2) std::swap(t1, t2);
    out.emplace_back(t1, t2);
    return out;
  }
  // Each branch is monotone; approaching the pole from the left runs off to
  // +inf when increasing.
  if (pole > lo) {
    const double t = image(lo);
    out.emplace_back(increasing ? std::make_pair(t, kInf) : std::make_pair(-kInf, t));
  }
  if (pole < hi) {
    const double t = image(hi);
    out.emplace_back(increasing ? std::make_pair(-kInf, t) : std::make_pair(t, kInf));
  }
  return out;
}

ComplexPoint cayley_to_disc(const ComplexPoint& w) {
  const Complex I(0.0, 1.0);
  if (w.is_infinity()) return ComplexPoint(Complex(-1.0, 0.0));
  const Complex v = w.value();
  const Complex den = I + v;
  if (den == Complex(0.0, 0.0)) return ComplexPoint::infinity();
  return ComplexPoint((I - v) / den);
}

ComplexPoint cayley_to_halfplane(const ComplexPoint& z) {
  const Complex I(0.0, 1.0);
  if (z.is_infinity()) return ComplexPoint(-I);
  const Complex v = z.value();
  const Complex den = 1.0 + v;
  if (den == Complex(0.0, 0.0)) return ComplexPoint::infinity();
  return ComplexPoint(I * (1.0 - v) / den);
}

MobiusMatrix disc_rotation_matrix(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return {c, s, -s, c};
}

}  // namespace herglotz
