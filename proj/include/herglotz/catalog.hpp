#pragma once

#include <memory>
#include <string>
#include <vector>

#include "herglotz/function.hpp"
#include "herglotz/measure.hpp"

namespace herglotz {

/// log|z| + i arg z with -pi < arg z < pi. Throws DomainError on (-inf, 0].
Complex principal_log(Complex z);
Complex principal_log(const ComplexPoint& z);
/// exp(p log z) on the principal branch.
Complex principal_power(Complex z, Complex p);

/// tan and cot through forms that stay accurate near the real poles and for
/// large |Im z|.
Complex tan_stable(Complex z);
Complex cot_stable(Complex z);

enum class CatalogKind {
  tan,
  cot,
  csc2,            // 2 / sin(2z) = tan z + cot z
  power,           // z^p
  power_log,       // z^p log z
  power_over_log,  // z^p / log z
  tan_sigma_log,   // tan(sigma log z)
  cot_sigma_log,   // cot(sigma log z)
  rational,        // a z + b + sum c_j / (s_j - z)
  cauchy,          // representing-measure integral
  disc_herglotz,   // disc picture: c + (1/2pi) int (zeta+z)/(zeta-z) mu(dt)
};

struct CatalogSpec {
  CatalogKind kind = CatalogKind::tan;
  Complex p{};
  double sigma = 1.0;
  Complex a{}, b{};
  std::vector<double> poles;
  std::vector<Complex> coeffs;
  std::shared_ptr<const BoundaryMeasure> measure;
  Complex constant{};

  /// Throws DomainError when the parameters are invalid.
  void validate() const;

  static CatalogSpec of(CatalogKind k, Complex p = {}) {
    CatalogSpec s;
    s.kind = k;
    s.p = p;
    return s;
  }
  static CatalogSpec with_sigma(CatalogKind k, double sigma) {
    CatalogSpec s = of(k);
    s.sigma = sigma;
    return s;
  }
  static CatalogSpec rational_of(Complex a, Complex b, std::vector<double> poles, std::vector<Complex> coeffs) {
    CatalogSpec s = of(CatalogKind::rational);
    s.a = a;
    s.b = b;
    s.poles = std::move(poles);
    s.coeffs = std::move(coeffs);
    return s;
  }
};

std::string to_string(CatalogKind k);
CatalogKind catalog_kind_from_string(const std::string& s);

AnalyticFunction catalog_build(const CatalogSpec& spec);

/// constant + sum mass * K(s, z) + int density * K(s, z) ds with
/// K(s, z) = (1 + s z)/(s - z) and K(inf, z) = z.
Complex cauchy_eval(const BoundaryMeasure& lambda, Complex constant, Complex z);
Complex cauchy_eval(const BoundaryMeasure& lambda, Complex constant, const ComplexPoint& z);
/// cauchy_eval as a half-plane function.
AnalyticFunction cauchy_function(const BoundaryMeasure& lambda, Complex constant);

/// c + (1/2pi) int (e^{it} + z)/(e^{it} - z) mu(dt) for a circle-picture measure.
Complex disc_herglotz_eval(const BoundaryMeasure& mu, Complex constant, Complex z);

}  // namespace herglotz
