#include "herglotz/function.hpp"

#include <algorithm>
#include <cmath>

namespace herglotz {

AnalyticFunction::AnalyticFunction(Evaluator eval, Picture picture, BoundarySupport support)
    : eval_(std::make_shared<const Evaluator>(std::move(eval))),
      picture_(picture),
      support_(std::move(support)) {}

Complex AnalyticFunction::operator()(Complex z) const {
  if (picture_ == Picture::half_plane) {
    if (z.imag() == 0.0) throw DomainError("evaluation on the real line");
  } else if (std::abs(z) == 1.0) {
    throw DomainError("evaluation on the unit circle");
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("evaluation at a non-finite point");
  return (*eval_)(z);
}

ComplexPoint AnalyticFunction::operator()(const ComplexPoint& z) const {
  if (z.is_infinity()) {
    if (picture_ == Picture::half_plane) throw DomainError("evaluation at infinity");
    // Disc functions are defined on |z| > 1; infinity is a removable point of
    // every function built here, approached radially.
    return (*this)(Complex(1e154, 0.0));
  }
  return (*this)(z.value());
}

AnalyticFunction star_reflect(const AnalyticFunction& f) {
  AnalyticFunction::Evaluator eval;
  BoundarySupport support = f.support();
  if (f.picture() == Picture::half_plane) {
    eval = [f](Complex w) { return std::conj(f.raw(std::conj(w))); };
  } else {
    eval = [f](Complex z) { return -std::conj(f.raw(1.0 / std::conj(z))); };
  }
  AnalyticFunction g(std::move(eval), f.picture(), std::move(support));
  g.simple_on_boundary = f.simple_on_boundary;
  g.simple_condition = f.simple_condition;
  g.has_representing_measure = f.has_representing_measure;
  if (!f.descriptor.is_null()) g.descriptor = {{"kind", "star"}, {"of", f.descriptor}};
  return g;
}

namespace {

// Image of a support set under t = B.s for real invertible B.
BoundarySupport transport_support(const BoundarySupport& src, const MobiusMatrix& B) {
  BoundarySupport out;
  const bool affine = B.c() == 0.0;
  const double pole = affine ? kInf : -B.d() / B.c();  // s with B.s = infinity
  const double image_of_inf = affine ? kInf : B.a() / B.c();

  auto image = [&](double s, bool* at_inf) {
    if (std::isinf(s)) {
      if (affine) {
        *at_inf = true;
        return kInf;
      }
      *at_inf = false;
      return image_of_inf;
    }
    return mobius_apply_real(B, s, at_inf);
  };
  auto add_point = [&](double s) {
    bool at_inf = false;
    const double t = image(s, &at_inf);
    if (at_inf) out.infinity = true;
    else out.points.push_back(t);
  };

  for (double p : src.points) add_point(p);
  if (src.infinity) {
    if (affine) out.infinity = true;
    else out.points.push_back(image_of_inf);
  }

  for (const auto& iv : src.intervals) {
    const auto pieces = mobius_image_interval(B, iv.lo, iv.hi);
    for (const auto& [t1, t2] : pieces) out.intervals.push_back({t1, t2});
    const bool touches_inf = (!affine && pole >= iv.lo && pole <= iv.hi) ||
                             (affine && (std::isinf(iv.lo) || std::isinf(iv.hi)));
    if (touches_inf) out.infinity = true;
  }

  if (src.arithmetic) {
    const auto [offset, period] = *src.arithmetic;
    if (affine) {
      const double scale = B.a() / B.d();
      out.arithmetic = BoundarySupport::ArithmeticLattice{scale * offset + B.b() / B.d(),
                                                          std::abs(scale * period)};
      out.infinity = true;
    } else {
      // No longer a lattice; keep the points that land at moderate size.
      for (long k = -4000; k <= 4000; ++k) add_point(offset + k * period);
    }
  }
  if (src.geometric) {
    const auto [base, ratio] = *src.geometric;
    if (affine && B.b() == 0.0 && B.a() / B.d() > 0.0) {
      out.geometric = BoundarySupport::GeometricLattice{base * B.a() / B.d(), ratio};
    } else {
      for (int k = -40; k <= 40; ++k) add_point(base * std::pow(ratio, k));
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

}  // namespace

AnalyticFunction compose_mobius(const AnalyticFunction& f, const MobiusMatrix& A) {
  if (f.picture() != Picture::half_plane) throw DomainError("compose_mobius: half-plane picture only");
  const double a = A.a(), b = A.b(), c = A.c(), d = A.d();
  AnalyticFunction g([f, a, b, c, d](Complex z) { return f.raw((a * z + b) / (c * z + d)); },
                     Picture::half_plane, transport_support(f.support(), A.inverse()));
  g.simple_on_boundary = f.simple_on_boundary;
  g.has_representing_measure = f.has_representing_measure;
  if (!f.descriptor.is_null())
    g.descriptor = {{"kind", "mobius"}, {"matrix", {a, b, c, d}}, {"of", f.descriptor}};
  return g;
}

AnalyticFunction invert_variable(const AnalyticFunction& f) {
  AnalyticFunction g = compose_mobius(f, MobiusMatrix::inversion());
  if (!f.descriptor.is_null()) g.descriptor = {{"kind", "invert"}, {"of", f.descriptor}};
  return g;
}

AnalyticFunction disc_picture(const AnalyticFunction& f) {
  if (f.picture() != Picture::half_plane) throw DomainError("disc_picture: expects a half-plane function");
  // Support in angle coordinates: s = tan(t/2), so t = 2 atan(s).
  BoundarySupport angles;
  // Lattices become explicit points; beyond |s| = 1e3 they sit within 2e-3 of pi.
  for (double s : f.support().points_in(-1e3, 1e3)) angles.points.push_back(2.0 * std::atan(s));
  for (double s : f.support().points)
    if (std::abs(s) > 1e3) angles.points.push_back(2.0 * std::atan(s));
  if (f.support().is_unbounded_discrete()) angles.points.push_back(kPi);
  if (f.support().infinity) angles.points.push_back(kPi);
  for (const auto& iv : f.support().intervals)
    angles.intervals.push_back({2.0 * std::atan(iv.lo), 2.0 * std::atan(iv.hi)});
  AnalyticFunction g(
      [f](Complex z) {
        const Complex w = Complex(0.0, 1.0) * (1.0 - z) / (1.0 + z);
        return Complex(0.0, -1.0) * f.raw(w);
      },
      Picture::disc, std::move(angles));
  g.simple_on_boundary = f.simple_on_boundary;
  g.has_representing_measure = f.has_representing_measure;
  if (!f.descriptor.is_null()) g.descriptor = {{"kind", "disc"}, {"of", f.descriptor}};
  return g;
}

AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g) {
  if (f.picture() != g.picture()) throw DomainError("sum of functions in different pictures");
  BoundarySupport s = f.support();
  const BoundarySupport& t = g.support();
  s.intervals.insert(s.intervals.end(), t.intervals.begin(), t.intervals.end());
  s.points.insert(s.points.end(), t.points.begin(), t.points.end());
  s.infinity = s.infinity || t.infinity;
  if (!s.arithmetic) s.arithmetic = t.arithmetic;
  if (!s.geometric) s.geometric = t.geometric;
  AnalyticFunction h([f, g](Complex z) { return f.raw(z) + g.raw(z); }, f.picture(), std::move(s));
  return h;
}

AnalyticFunction operator*(Complex c, const AnalyticFunction& f) {
  AnalyticFunction h([f, c](Complex z) { return c * f.raw(z); }, f.picture(), f.support());
  h.simple_on_boundary = f.simple_on_boundary;
  return h;
}

}  // namespace herglotz
