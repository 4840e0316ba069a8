#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "herglotz/common.hpp"
#include "herglotz/geometry.hpp"
#include "herglotz/quadrature.hpp"
#include "herglotz/test_function.hpp"

namespace herglotz {

enum class MeasurePicture { line, circle };

/// Point mass. On the line, loc = +inf stands for the point at infinity; on
/// the circle, loc is an angle in (-pi, pi] and -1 sits at pi.
struct Atom {
  double loc;
  Complex mass;
};

/// Absolutely continuous piece on [lo, hi] (ends may be infinite).
struct DensityPart {
  double lo, hi;
  std::function<Complex(double)> density;
  std::vector<double> breakpoints;  // interior points where the density is not smooth
  nlohmann::json descriptor;        // serializable recipe; see density_from_json
};

/// Monotone piecewise cubic (Fritsch-Carlson) interpolant, applied to the
/// real and imaginary parts separately. Constant extension outside the nodes.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> xs, std::vector<Complex> ys);
  Complex operator()(double x) const;
  [[nodiscard]] const std::vector<double>& xs() const { return xs_; }
  [[nodiscard]] const std::vector<Complex>& ys() const { return ys_; }

 private:
  std::vector<double> xs_;
  std::vector<Complex> ys_;
  std::vector<Complex> slopes_;
};

/// Complex Radon measure on the extended line (or the circle): atoms plus
/// density parts, stored separately.
class BoundaryMeasure {
 public:
  BoundaryMeasure() = default;
  explicit BoundaryMeasure(MeasurePicture picture) : picture_(picture) {}

  BoundaryMeasure& add_atom(double loc, Complex mass);
  BoundaryMeasure& add_density(DensityPart part);

  [[nodiscard]] MeasurePicture picture() const { return picture_; }
  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
  [[nodiscard]] const std::vector<DensityPart>& densities() const { return densities_; }

  /// Mass of the atom at loc (0 if none).
  [[nodiscard]] Complex atom_mass(double loc) const;

  /// Allows atoms inside density supports (a mixed measure).
  bool allow_overlap = false;
  /// Throws DomainError on duplicate atom locations or, unless allow_overlap,
  /// an atom in the interior of a density support.
  void validate() const;

 private:
  MeasurePicture picture_ = MeasurePicture::line;
  std::vector<Atom> atoms_;
  std::vector<DensityPart> densities_;
};

/// Quadrature settings for integrals against measures.
quad::Options measure_quadrature();

/// Sum over atoms of g(loc) * mass plus the integral of g * density.
/// g_at_infinity is used for an atom at infinity. `extra_breakpoints` are
/// passed to every density integral.
Complex integrate_against(const BoundaryMeasure& m, const std::function<Complex(double)>& g,
                          std::optional<Complex> g_at_infinity,
                          const std::vector<double>& extra_breakpoints = {},
                          const quad::Options& opts = measure_quadrature());

/// Integral of a test function. Throws DomainError if the measure has an atom
/// at infinity and the test function has no value there.
Complex integrate(const BoundaryMeasure& m, const TestFunction& f);

/// lambda^A(dt) = (1/det A) ((at+b)^2 + (ct+d)^2)/(1+t^2) lambda(A.dt).
BoundaryMeasure pushforward_mobius(const BoundaryMeasure& m, const MobiusMatrix& A);

/// Weight ((at+b)^2 + (ct+d)^2)/(1+t^2); its limit a^2 + c^2 at t = +-inf.
double pushforward_weight(const MobiusMatrix& A, double t);

BoundaryMeasure conjugate(const BoundaryMeasure& m);

/// Sum of |mass| plus the integral of |density|. With finite_only, the atom at
/// infinity is left out.
double total_variation(const BoundaryMeasure& m, bool finite_only = false);

/// Density parts for the power-type closed forms on (-inf, 0):
///   power:          (-x)^p sin(pi p) / (pi (1+x^2))
///   power-log:      (sin(pi p) log|x| / pi + cos(pi p)) |x|^p / (1+x^2)
///   power-over-log: |x|^p [e^{i pi p}/(L + i pi) - e^{-i pi p}/(L - i pi)] / (2 pi i (1+x^2)), L = log|x|
Complex power_density(Complex p, double x);
Complex power_log_density(Complex p, double x);
Complex power_over_log_density(Complex p, double x);

/// JSON helpers: infinities travel as the strings "inf" / "-inf"; complex
/// numbers as [re, im] (a bare number is read as real).
nlohmann::json real_to_json(double x);
double json_real(const nlohmann::json& j);
nlohmann::json complex_to_json(Complex z);
Complex json_complex(const nlohmann::json& j);

/// Builds a density part from its JSON descriptor (kinds catalog-power,
/// catalog-power-log, catalog-power-over-log, table, pushforward, conjugate).
DensityPart density_from_json(const nlohmann::json& j);
/// A table density part with a monotone cubic interpolant.
DensityPart table_density(std::vector<double> xs, std::vector<Complex> vals);

}  // namespace herglotz
