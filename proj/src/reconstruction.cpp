#include "herglotz/reconstruction.hpp"

#include <algorithm>
#include <cmath>

#include "herglotz/catalog.hpp"
#include "herglotz/extraction.hpp"
#include "herglotz/parallel.hpp"
#include "herglotz/serialization.hpp"

namespace herglotz {
namespace {

const Complex I(0.0, 1.0);

struct Segment {
  double lo, hi;
  bool sigma_lo, sigma_hi;  // ends at exceptional points
  int far = 0;              // -1 / +1 for the far-field stretches
};

std::vector<double> segment_nodes(const Segment& s, const ReconstructionSpec& spec, double inner_step) {
  std::vector<double> xs;
  const double q = spec.grading_ratio;
  if (s.far != 0) {
    // geometric away from the window edge, out to the far-field end
    const double edge = s.far < 0 ? s.hi : s.lo;
    const double extent = s.hi - s.lo;
    xs.push_back(edge);
    for (double d = inner_step; d < extent; d *= q) xs.push_back(edge + s.far * d);
    xs.push_back(s.far < 0 ? s.lo : s.hi);
  } else {
    const int n = spec.resolution;
    const double len = s.hi - s.lo;
    const double d_lo = spec.min_distance * std::max(1.0, std::abs(s.lo));
    const double d_hi = spec.min_distance * std::max(1.0, std::abs(s.hi));
    for (int j = 0; j < n; ++j) {
      const double x = s.lo + 0.5 * len * (1.0 - std::cos(kPi * j / (n - 1)));
      if (s.sigma_lo && x - s.lo < d_lo) continue;
      if (s.sigma_hi && s.hi - x < d_hi) continue;
      xs.push_back(x);
    }
    if (s.sigma_lo)
      for (double d = d_lo; d < 0.5 * len; d *= q) xs.push_back(s.lo + d);
    if (s.sigma_hi)
      for (double d = d_hi; d < 0.5 * len; d *= q) xs.push_back(s.hi - d);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || x - out.back() > 1e-13 * std::max(1.0, std::abs(x))) out.push_back(x);
  return out;
}

bool support_beyond(const BoundarySupport& s, double lo, double hi, bool infinity_covered) {
  if (s.infinity && !infinity_covered) return true;
  if (s.is_unbounded_discrete()) return true;
  for (double p : s.points)
    if (p < lo || p > hi) return true;
  for (const auto& iv : s.intervals)
    if (iv.lo < lo || iv.hi > hi) return true;
  return false;
}

}  // namespace

void ReconstructionSpec::validate() const {
  if (!(window_lo < window_hi) || !std::isfinite(window_lo) || !std::isfinite(window_hi))
    throw DomainError("reconstruction window must be a bounded nonempty interval");
  for (double s : sigma)
    if (!(s > window_lo && s < window_hi)) throw DomainError("exceptional points must lie inside the window");
  if (resolution < 4) throw DomainError("resolution must be at least 4");
  if (!(grading_ratio > 1.0 && grading_ratio <= 2.0)) throw DomainError("grading ratio must lie in (1, 2]");
  if (!(min_distance > 0.0 && min_distance < 0.1)) throw DomainError("min_distance must lie in (0, 0.1)");
  if (far_field != 0.0 && !(far_field > std::max(std::abs(window_lo), std::abs(window_hi))))
    throw DomainError("far_field must be 0 or reach past the window");
  density_schedule.validate();
  atom_schedule.validate();
  infinity_schedule.validate();
}

ReconstructionSpec reconstruction_spec_from_json(const nlohmann::json& j) {
  ReconstructionSpec s;
  if (j.contains("window")) {
    s.window_lo = json_real(j["window"].at(0));
    s.window_hi = json_real(j["window"].at(1));
  }
  for (const auto& v : j.value("sigma", nlohmann::json::array())) {
    const double x = json_real(v);
    if (std::isinf(x)) s.include_infinity = true;
    else s.sigma.push_back(x);
  }
  s.include_infinity = j.value("include_infinity", s.include_infinity);
  s.resolution = j.value("resolution", s.resolution);
  s.grading_ratio = j.value("grading_ratio", s.grading_ratio);
  s.min_distance = j.value("min_distance", s.min_distance);
  s.far_field = j.value("far_field", s.far_field);
  s.validate();
  return s;
}

nlohmann::json reconstruction_spec_to_json(const ReconstructionSpec& spec) {
  nlohmann::json sig = nlohmann::json::array();
  for (double s : spec.sigma) sig.push_back(s);
  return {{"window", {spec.window_lo, spec.window_hi}},
          {"sigma", sig},
          {"include_infinity", spec.include_infinity},
          {"resolution", spec.resolution},
          {"grading_ratio", spec.grading_ratio},
          {"min_distance", spec.min_distance},
          {"far_field", spec.far_field}};
}

ReconstructionResult reconstruct(const AnalyticFunction& f, const ReconstructionSpec& spec) {
  if (f.picture() != Picture::half_plane) throw DomainError("reconstruct: half-plane picture required");
  spec.validate();

  const SimpleScanReport scan = simple_scan(f, spec.window_lo, spec.window_hi);
  if (!scan.bounded) throw NonSimpleBehavior(scan.diagnosis());
  if (spec.include_infinity) {
    const SimpleScanReport inf_scan = simple_scan(f, spec.window_hi, kInf);
    if (!inf_scan.bounded) throw NonSimpleBehavior(inf_scan.diagnosis());
  }

  std::vector<double> sigma = spec.sigma;
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());

  // Segments: far field, then the window cut at the exceptional points.
  std::vector<Segment> segments;
  if (spec.far_field > 0.0) segments.push_back({-spec.far_field, spec.window_lo, false, false, -1});
  std::vector<double> cuts{spec.window_lo};
  cuts.insert(cuts.end(), sigma.begin(), sigma.end());
  cuts.push_back(spec.window_hi);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    segments.push_back({cuts[k], cuts[k + 1], k > 0, k + 2 < cuts.size(), 0});
  if (spec.far_field > 0.0) segments.push_back({spec.window_hi, spec.far_field, false, false, 1});

  const double inner_step = (spec.window_hi - spec.window_lo) / spec.resolution;
  ReconstructionResult res;
  res.measure = BoundaryMeasure(MeasurePicture::line);
  nlohmann::json density_diag = nlohmann::json::array();
  int unconverged = 0;

  for (const Segment& seg : segments) {
    const std::vector<double> xs = segment_nodes(seg, spec, inner_step);
    if (xs.size() < 2) continue;
    std::vector<ExtrapolatedLimit> lims(xs.size());
    parallel_for(xs.size(), [&](std::size_t k) {
      double dist = kInf;
      for (double s : sigma) dist = std::min(dist, std::abs(xs[k] - s));
      const LimitSchedule sched = spec.density_schedule.starting_at(0.25 * dist);
      lims[k] = density_at(f, xs[k], sched);
    });
    std::vector<Complex> vals;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      vals.push_back(lims[k].value);
      if (!lims[k].converged) ++unconverged;
      density_diag.push_back({xs[k], lims[k].value.real(), lims[k].value.imag(), lims[k].error_estimate});
    }
    res.measure.add_density(table_density(xs, vals));
  }

  nlohmann::json atom_diag = nlohmann::json::array();
  for (double s : sigma) {
    const ExtrapolatedLimit lim = atomic_mass_limit(f, s, spec.atom_schedule);
    atom_diag.push_back({{"loc", s},
                         {"mass", complex_to_json(lim.value)},
                         {"error", lim.error_estimate},
                         {"converged", lim.converged}});
    if (!lim.converged) throw NonSimpleBehavior("atomic limit at " + format_double(s) + " diverges");
    const Complex mass = lim.value;
    res.measure.add_atom(s, mass);
    res.residues.emplace_back(s, -(1.0 + s * s) * mass);
  }
  if (spec.include_infinity) {
    const ExtrapolatedLimit lim = atomic_mass_limit_at_infinity(f, spec.infinity_schedule);
    atom_diag.push_back({{"loc", "inf"},
                         {"mass", complex_to_json(lim.value)},
                         {"error", lim.error_estimate},
                         {"converged", lim.converged}});
    if (!lim.converged) throw NonSimpleBehavior("atomic limit at infinity diverges");
    const Complex mass = lim.value;
    res.measure.add_atom(kInf, mass);
    res.residues.emplace_back(kInf, mass);
  }
  res.measure.allow_overlap = true;

  res.constant = 0.5 * (f(I) + f(-I));
  const double lo = spec.far_field > 0.0 ? -spec.far_field : spec.window_lo;
  const double hi = spec.far_field > 0.0 ? spec.far_field : spec.window_hi;
  res.window_truncated = support_beyond(f.support(), lo, hi, spec.include_infinity);

  res.diagnostics = {{"spec", reconstruction_spec_to_json(spec)},
                     {"constant", complex_to_json(res.constant)},
                     {"window_truncated", res.window_truncated},
                     {"unconverged_density_nodes", unconverged},
                     {"simple_scan", scan.to_json()},
                     {"atoms", atom_diag},
                     {"density", density_diag}};
  return res;
}

double resynthesis_residual(const AnalyticFunction& f, const ReconstructionResult& result,
                            const std::vector<Complex>& probes) {
  double worst = 0.0;
  for (const Complex& z : probes) {
    if (z.imag() == 0.0) throw DomainError("resynthesis probes must lie off the real line");
    worst = std::max(worst, std::abs(f(z) - cauchy_eval(result.measure, result.constant, z)));
  }
  return worst;
}

std::vector<Atom> tan_sigma_log_masses(double sigma, const std::vector<int>& n_range) {
  if (!(sigma > 0.0)) throw DomainError("tan_sigma_log_masses: sigma must be positive");
  std::vector<Atom> out;
  for (int n : n_range) {
    const double e = kPi * n / (2.0 * sigma);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    out.push_back({std::exp(e), sign / (sigma * (std::exp(e) + std::exp(-e)))});
  }
  return out;
}

}  // namespace herglotz
