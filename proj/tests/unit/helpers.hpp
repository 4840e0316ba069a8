#pragma once

#include <algorithm>
#include <cmath>

#include "herglotz/catalog.hpp"
#include "herglotz/measure.hpp"

namespace test_helpers {

using herglotz::Complex;

inline const Complex I(0.0, 1.0);

inline double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// sqrt(-x)/(pi(1+x^2)) on (-inf, 0): the representing measure of z^{1/2}.
inline herglotz::BoundaryMeasure sqrt_measure() {
  herglotz::BoundaryMeasure m;
  m.add_density(herglotz::density_from_json({{"kind", "catalog-power"}, {"p", {0.5, 0.0}}, {"support", {"-inf", 0.0}}}));
  return m;
}

// Composite Simpson rule: an oracle independent of the library quadrature.
template <class F>
Complex simpson(F&& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  Complex s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

inline herglotz::AnalyticFunction minus_inverse() {
  return herglotz::catalog_build(herglotz::CatalogSpec::rational_of(0, 0, {0.0}, {1.0}));
}

}  // namespace test_helpers
