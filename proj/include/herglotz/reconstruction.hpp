#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "herglotz/extrapolation.hpp"
#include "herglotz/function.hpp"
#include "herglotz/measure.hpp"

namespace herglotz {

/// Where and how finely to recover a representing measure.
struct ReconstructionSpec {
  double window_lo = -1.0, window_hi = 1.0;
  std::vector<double> sigma;    // finite exceptional points, inside the window
  bool include_infinity = false;
  /// Chebyshev nodes per subinterval between consecutive exceptional points.
  int resolution = 48;
  /// Nodes grow geometrically with this ratio away from exceptional points.
  double grading_ratio = 1.05;
  /// Closest density node to an exceptional point sigma, relative to max(1, |sigma|).
  double min_distance = 1e-9;
  /// When positive, the density is also tabulated on [-far_field, window_lo]
  /// and [window_hi, far_field] with geometric spacing away from the window.
  double far_field = 0.0;
  LimitSchedule density_schedule = LimitSchedule::line();
  LimitSchedule atom_schedule = LimitSchedule::atomic();
  LimitSchedule infinity_schedule = LimitSchedule::infinity();

  /// Throws DomainError on an empty window, sigma outside it, or bad grading.
  void validate() const;
};

ReconstructionSpec reconstruction_spec_from_json(const nlohmann::json& j);
nlohmann::json reconstruction_spec_to_json(const ReconstructionSpec& spec);

struct ReconstructionResult {
  BoundaryMeasure measure;
  Complex constant{};  // (f(i) + f(-i))/2
  /// rho(sigma) = -(1+sigma^2) lambda[sigma]; rho(inf) = lambda[inf].
  std::vector<std::pair<double, Complex>> residues;
  /// The boundary support of f reaches past the scanned range, so the
  /// recovered measure is a truncation.
  bool window_truncated = false;
  /// Per-node limits: {"density":[[x,re,im,err],...],"atoms":[{loc,mass,error,converged}],...}.
  nlohmann::json diagnostics;
};

/// Density limits on a grid over the window minus sigma, atomic masses at
/// sigma (and infinity when flagged), and the constant. Throws
/// NonSimpleBehavior when f fails the simple-behavior scan on the window or an
/// atomic limit diverges.
ReconstructionResult reconstruct(const AnalyticFunction& f, const ReconstructionSpec& spec);

/// max over probes of |f(z) - cauchy_eval(measure, constant, z)|.
double resynthesis_residual(const AnalyticFunction& f, const ReconstructionResult& result,
                            const std::vector<Complex>& probes);

/// Closed-form masses of 2/sin(2 sigma log z) at e^{pi n / (2 sigma)}:
/// (-1)^{n+1} (1/sigma) / (e^{pi n/(2 sigma)} + e^{-pi n/(2 sigma)}).
std::vector<Atom> tan_sigma_log_masses(double sigma, const std::vector<int>& n_range);

}  // namespace herglotz
