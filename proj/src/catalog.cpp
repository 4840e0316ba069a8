#include "herglotz/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "herglotz/serialization.hpp"

namespace herglotz {
namespace {

const Complex I(0.0, 1.0);

std::string describe(Complex p) {
  std::string s = std::to_string(p.real());
  if (p.imag() != 0.0) s += (p.imag() < 0 ? "" : "+") + std::to_string(p.imag()) + "i";
  return s;
}

BoundarySupport negative_axis_support() {
  BoundarySupport s;
  s.intervals.push_back({-kInf, 0.0});
  s.infinity = true;
  return s;
}

}  // namespace

Complex principal_log(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("principal_log: non-finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("principal_log: argument on the cut (-inf, 0]");
  return std::log(z);
}

Complex principal_log(const ComplexPoint& z) {
  if (z.is_infinity()) throw DomainError("principal_log: argument at infinity");
  return principal_log(z.value());
}

Complex principal_power(Complex z, Complex p) { return std::exp(p * principal_log(z)); }

Complex tan_stable(Complex z) {
  const double x = z.real(), y = z.imag();
  if (std::abs(y) > 20.0) {
    const double e = std::exp(-2.0 * std::abs(y));
    return {2.0 * std::sin(2.0 * x) * e, std::copysign(1.0, y)};
  }
  const double c = std::cos(x), sh = std::sinh(y);
  const double den = 2.0 * (c * c + sh * sh);
  return {std::sin(2.0 * x) / den, std::sinh(2.0 * y) / den};
}

Complex cot_stable(Complex z) {
  const double x = z.real(), y = z.imag();
  if (std::abs(y) > 20.0) {
    const double e = std::exp(-2.0 * std::abs(y));
    return {2.0 * std::sin(2.0 * x) * e, -std::copysign(1.0, y)};
  }
  const double s = std::sin(x), sh = std::sinh(y);
  const double den = 2.0 * (s * s + sh * sh);
  return {std::sin(2.0 * x) / den, -std::sinh(2.0 * y) / den};
}

std::string to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::tan: return "tan";
    case CatalogKind::cot: return "cot";
    case CatalogKind::csc2: return "csc2";
    case CatalogKind::power: return "power";
    case CatalogKind::power_log: return "power_log";
    case CatalogKind::power_over_log: return "power_over_log";
    case CatalogKind::tan_sigma_log: return "tan_sigma_log";
    case CatalogKind::cot_sigma_log: return "cot_sigma_log";
    case CatalogKind::rational: return "rational";
    case CatalogKind::cauchy: return "cauchy";
    case CatalogKind::disc_herglotz: return "disc_herglotz";
  }
  return "?";
}

CatalogKind catalog_kind_from_string(const std::string& s) {
  for (CatalogKind k : {CatalogKind::tan, CatalogKind::cot, CatalogKind::csc2, CatalogKind::power,
                        CatalogKind::power_log, CatalogKind::power_over_log, CatalogKind::tan_sigma_log,
                        CatalogKind::cot_sigma_log, CatalogKind::rational, CatalogKind::cauchy,
                        CatalogKind::disc_herglotz})
    if (to_string(k) == s) return k;
  throw DomainError("unknown catalog kind: " + s);
}

void CatalogSpec::validate() const {
  switch (kind) {
    case CatalogKind::tan_sigma_log:
    case CatalogKind::cot_sigma_log:
      if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
      break;
    case CatalogKind::rational:
      if (poles.size() != coeffs.size()) throw DomainError("rational: poles and coeffs differ in length");
      for (std::size_t i = 0; i < poles.size(); ++i) {
        if (!std::isfinite(poles[i])) throw DomainError("rational: poles must be finite reals");
        if (coeffs[i] == Complex{}) throw DomainError("rational: coefficients must be nonzero");
        for (std::size_t j = 0; j < i; ++j)
          if (poles[j] == poles[i]) throw DomainError("rational: poles must be distinct");
      }
      break;
    case CatalogKind::cauchy:
      if (!measure) throw DomainError("cauchy: measure missing");
      if (measure->picture() != MeasurePicture::line) throw DomainError("cauchy: line-picture measure required");
      break;
    case CatalogKind::disc_herglotz:
      if (!measure) throw DomainError("disc_herglotz: measure missing");
      if (measure->picture() != MeasurePicture::circle)
        throw DomainError("disc_herglotz: circle-picture measure required");
      break;
    default:
      break;
  }
}

Complex cauchy_eval(const BoundaryMeasure& lambda, Complex constant, Complex z) {
  if (z.imag() == 0.0) throw DomainError("cauchy_eval: z on the real line");
  auto kernel = [z](double s) { return (1.0 + s * z) / (s - z); };
  std::vector<double> cuts;
  const double y = std::abs(z.imag());
  if (y < 1.0) cuts = quad::graded_breakpoints(z.real(), y, -kInf, kInf, 64.0);
  return constant + integrate_against(lambda, kernel, z, cuts);
}

Complex cauchy_eval(const BoundaryMeasure& lambda, Complex constant, const ComplexPoint& z) {
  if (z.is_infinity()) throw DomainError("cauchy_eval: z at infinity");
  return cauchy_eval(lambda, constant, z.value());
}

AnalyticFunction cauchy_function(const BoundaryMeasure& lambda, Complex constant) {
  CatalogSpec spec = CatalogSpec::of(CatalogKind::cauchy);
  spec.measure = std::make_shared<const BoundaryMeasure>(lambda);
  spec.constant = constant;
  return catalog_build(spec);
}

Complex disc_herglotz_eval(const BoundaryMeasure& mu, Complex constant, Complex z) {
  if (std::abs(z) == 1.0) throw DomainError("disc_herglotz: z on the unit circle");
  auto kernel = [z](double t) {
    const Complex zeta = std::polar(1.0, t);
    return (zeta + z) / (zeta - z);
  };
  std::vector<double> cuts;
  const double d = std::abs(1.0 - std::abs(z));
  if (d < 0.5) cuts = quad::graded_breakpoints(std::arg(z), d, -kPi, kPi, 1.0);
  return constant + integrate_against(mu, kernel, std::nullopt, cuts) / (2.0 * kPi);
}

AnalyticFunction catalog_build(const CatalogSpec& spec) {
  spec.validate();
  AnalyticFunction::Evaluator eval;
  BoundarySupport support;
  Picture picture = Picture::half_plane;
  Tristate simple = Tristate::yes;
  std::string condition;
  bool has_measure = true;
  const Complex p = spec.p;
  const double rp = p.real();

  switch (spec.kind) {
    case CatalogKind::tan:
      eval = tan_stable;
      support.arithmetic = BoundarySupport::ArithmeticLattice{kPi / 2.0, kPi};
      support.infinity = true;
      break;
    case CatalogKind::cot:
      eval = cot_stable;
      support.arithmetic = BoundarySupport::ArithmeticLattice{0.0, kPi};
      support.infinity = true;
      break;
    case CatalogKind::csc2:
      eval = [](Complex z) -> Complex {
        if (std::abs(z.imag()) > 20.0) return tan_stable(z) + cot_stable(z);
        return 2.0 / std::sin(2.0 * z);
      };
      support.arithmetic = BoundarySupport::ArithmeticLattice{0.0, kPi / 2.0};
      support.infinity = true;
      break;
    case CatalogKind::power:
      eval = [p](Complex z) { return std::exp(p * std::log(z)); };
      support = negative_axis_support();
      condition = "-1 <= Re p <= 1 (p = " + describe(p) + ")";
      simple = (rp >= -1.0 && rp <= 1.0) ? Tristate::yes : Tristate::no;
      has_measure = (rp > -1.0 && rp < 1.0) ||
                    (p.imag() == 0.0 && (rp == -1.0 || rp == 0.0 || rp == 1.0));
      break;
    case CatalogKind::power_log:
      eval = [p](Complex z) {
        const Complex L = std::log(z);
        return std::exp(p * L) * L;
      };
      support = negative_axis_support();
      condition = "-1 < Re p < 1 (p = " + describe(p) + ")";
      simple = (rp > -1.0 && rp < 1.0) ? Tristate::yes : Tristate::no;
      has_measure = simple == Tristate::yes;
      break;
    case CatalogKind::power_over_log:
      eval = [p](Complex z) {
        const Complex L = std::log(z);
        return std::exp(p * L) / L;
      };
      support = negative_axis_support();
      support.points.push_back(1.0);
      condition = "-1 <= Re p <= 1 (p = " + describe(p) + ")";
      simple = (rp >= -1.0 && rp <= 1.0) ? Tristate::yes : Tristate::no;
      has_measure = rp > -1.0 && rp < 1.0;
      break;
    case CatalogKind::tan_sigma_log:
    case CatalogKind::cot_sigma_log: {
      const double sigma = spec.sigma;
      const bool is_tan = spec.kind == CatalogKind::tan_sigma_log;
      eval = [sigma, is_tan](Complex z) {
        const Complex w = sigma * std::log(z);
        return is_tan ? tan_stable(w) : cot_stable(w);
      };
      support = negative_axis_support();
      const double ratio = std::exp(kPi / sigma);
      support.geometric =
          BoundarySupport::GeometricLattice{is_tan ? std::exp(kPi / (2.0 * sigma)) : 1.0, ratio};
      break;
    }
    case CatalogKind::rational: {
      const Complex a = spec.a, b = spec.b;
      const auto poles = spec.poles;
      const auto coeffs = spec.coeffs;
      eval = [a, b, poles, coeffs](Complex z) {
        Complex v = a * z + b;
        for (std::size_t j = 0; j < poles.size(); ++j) v += coeffs[j] / (poles[j] - z);
        return v;
      };
      support.points = spec.poles;
      std::sort(support.points.begin(), support.points.end());
      support.infinity = a != Complex{};
      break;
    }
    case CatalogKind::cauchy: {
      auto m = spec.measure;
      const Complex c = spec.constant;
      eval = [m, c](Complex z) { return cauchy_eval(*m, c, z); };
      for (const auto& atom : m->atoms()) {
        if (atom.mass == Complex{}) continue;
        if (std::isinf(atom.loc)) support.infinity = true;
        else support.points.push_back(atom.loc);
      }
      for (const auto& d : m->densities()) {
        support.intervals.push_back({d.lo, d.hi});
        if (std::isinf(d.lo) || std::isinf(d.hi)) support.infinity = true;
      }
      std::sort(support.points.begin(), support.points.end());
      break;
    }
    case CatalogKind::disc_herglotz: {
      auto m = spec.measure;
      const Complex c = spec.constant;
      eval = [m, c](Complex z) { return disc_herglotz_eval(*m, c, z); };
      picture = Picture::disc;
      for (const auto& atom : m->atoms())
        if (atom.mass != Complex{}) support.points.push_back(atom.loc);
      for (const auto& d : m->densities()) support.intervals.push_back({d.lo, d.hi});
      break;
    }
  }

  AnalyticFunction f(std::move(eval), picture, std::move(support));
  f.simple_on_boundary = simple;
  f.simple_condition = condition;
  f.has_representing_measure = has_measure;
  f.descriptor = catalog_spec_to_json(spec);
  return f;
}

}  // namespace herglotz
