#include "herglotz/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "herglotz/measure.hpp"
#include "herglotz/parallel.hpp"

namespace herglotz {
namespace {

const Complex I(0.0, 1.0);

// Lattice supports are infinite; breakpoints are only generated in a bounded range.
constexpr double kLatticeRange = 1e3;

}  // namespace

quad::Options extraction_quadrature() {
  quad::Options o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-12;
  o.max_intervals = 6000;
  return o;
}

std::vector<double> boundary_breakpoints(const AnalyticFunction& f, double lo, double hi, double y) {
  const double blo = std::max(lo, -kLatticeRange), bhi = std::min(hi, kLatticeRange);
  std::vector<double> cuts;
  if (!(blo < bhi)) return cuts;
  const double reach = std::min(8.0, bhi - blo);
  for (double p : f.support().breakpoints_in(blo, bhi)) {
    const auto g = quad::graded_breakpoints(p, y, lo, hi, reach);
    cuts.insert(cuts.end(), g.begin(), g.end());
  }
  if (std::isfinite(lo) && std::isfinite(hi)) {
    // Support points just outside the range still shape the integrand near its ends.
    for (double p : f.support().breakpoints_in(lo - 1.0, hi + 1.0)) {
      if (p >= lo && p <= hi) continue;
      const double end = p < lo ? lo : hi;
      const auto g = quad::graded_breakpoints(end, std::max(y, std::abs(p - end)), lo, hi, reach);
      cuts.insert(cuts.end(), g.begin(), g.end());
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

ExtrapolatedLimit extract_functional(const AnalyticFunction& f, const TestFunction& test,
                                     const LimitSchedule& sched) {
  if (f.picture() != Picture::half_plane) throw DomainError("extract_functional: half-plane picture required");
  sched.validate();
  const std::vector<double> ys = sched.nodes();
  std::vector<Complex> values(ys.size());
  const double lo = test.lo(), hi = test.hi();
  parallel_for(ys.size(), [&](std::size_t k) {
    const double y = ys[k];
    auto integrand = [&](double x) -> Complex {
      const Complex t = test(x);
      if (t == Complex{}) return {};
      return t * (f.raw(Complex(x, y)) - f.raw(Complex(x, -y))) / (2.0 * kPi * I * (1.0 + x * x));
    };
    values[k] = quad::integrate(integrand, lo, hi, boundary_breakpoints(f, lo, hi, y),
                                extraction_quadrature())
                    .value;
  });
  std::vector<std::pair<double, Complex>> samples;
  for (std::size_t k = 0; k < ys.size(); ++k) samples.emplace_back(ys[k], values[k]);
  return extrapolate_to_zero(std::move(samples), sched.order);
}

ExtrapolatedLimit density_at(const AnalyticFunction& f, double x, const LimitSchedule& sched) {
  if (f.picture() != Picture::half_plane) throw DomainError("density_at: half-plane picture required");
  return limit_at_zero(
      [&](double y) { return (f(Complex(x, y)) - f(Complex(x, -y))) / (2.0 * kPi * I * (1.0 + x * x)); },
      sched);
}

ExtrapolatedLimit atomic_mass_limit(const AnalyticFunction& f, double x, const LimitSchedule& sched) {
  if (f.picture() != Picture::half_plane) throw DomainError("atomic_mass_at: half-plane picture required");
  LimitSchedule s = sched;
  const double iso = f.support().isolation(x);
  if (iso > 0.0) s.y0 = std::min(s.y0, 0.5 * iso);
  const ExtrapolatedLimit poly =
      limit_at_zero([&](double y) { return y * f(Complex(x, y)) / (I * (1.0 + x * x)); }, s);
  // branch points give y^a terms with fractional a, which only the geometric transform removes
  ExtrapolatedLimit geo = extrapolate_geometric(poly.sequence);
  return geo.error_estimate < poly.error_estimate ? geo : poly;
}

Complex atomic_mass_at(const AnalyticFunction& f, double x, const LimitSchedule& sched) {
  const ExtrapolatedLimit lim = atomic_mass_limit(f, x, sched);
  if (!lim.converged) {
    std::ostringstream msg;
    msg << "non-simple behavior at " << x << ": y f(x+iy) does not settle (error estimate "
        << lim.error_estimate << ")";
    throw NonSimpleBehavior(msg.str());
  }
  return lim.value;
}

ExtrapolatedLimit atomic_mass_limit_at_infinity(const AnalyticFunction& f, const LimitSchedule& sched) {
  if (f.picture() != Picture::half_plane) throw DomainError("atomic_mass_at_infinity: half-plane picture required");
  const ExtrapolatedLimit poly = limit_at_zero([&](double eps) { return f(Complex(0.0, 1.0 / eps)) * eps / I; }, sched);
  ExtrapolatedLimit geo = extrapolate_geometric(poly.sequence);
  return geo.error_estimate < poly.error_estimate ? geo : poly;
}

Complex atomic_mass_at_infinity(const AnalyticFunction& f, const LimitSchedule& sched) {
  const ExtrapolatedLimit lim = atomic_mass_limit_at_infinity(f, sched);
  if (!lim.converged) {
    std::ostringstream msg;
    msg << "non-simple behavior at infinity: f(iy)/y does not settle (error estimate " << lim.error_estimate
        << ")";
    throw NonSimpleBehavior(msg.str());
  }
  return lim.value;
}

double vladimirov_norm(const AnalyticFunction& f, const PolarGrid& grid) {
  auto weighted = [&](double log_r, double theta) {
    const Complex z = std::polar(std::exp(log_r), theta);
    if (!(z.imag() > 0.0)) return 0.0;
    return z.imag() / (1.0 + std::norm(z)) * std::abs(f(z));
  };
  const double l0 = std::log(grid.r_min), l1 = std::log(grid.r_max);
  const double dl = (l1 - l0) / (grid.radii - 1);
  const double dt = kPi / (grid.angles + 1);
  std::vector<double> row_best(grid.radii, 0.0);
  std::vector<int> row_arg(grid.radii, 0);
  parallel_for(grid.radii, [&](std::size_t i) {
    for (int j = 1; j <= grid.angles; ++j) {
      const double v = weighted(l0 + i * dl, j * dt);
      if (v > row_best[i]) {
        row_best[i] = v;
        row_arg[i] = j;
      }
    }
  });
  const auto it = std::max_element(row_best.begin(), row_best.end());
  double best = *it;
  if (!grid.refine) return best;
  // Compass search from the best node, confined to the scanned box.
  double lr = l0 + (it - row_best.begin()) * dl;
  double th = row_arg[it - row_best.begin()] * dt;
  double sl = dl, st = dt;
  while (sl > 1e-12 || st > 1e-12) {
    bool moved = false;
    for (auto [a, b] : {std::pair{sl, 0.0}, {-sl, 0.0}, {0.0, st}, {0.0, -st}}) {
      const double nl = std::clamp(lr + a, l0, l1), nt = std::clamp(th + b, dt * 1e-3, kPi - dt * 1e-3);
      const double v = weighted(nl, nt);
      if (v > best) {
        best = v;
        lr = nl;
        th = nt;
        moved = true;
      }
    }
    if (!moved) {
      sl *= 0.5;
      st *= 0.5;
    }
  }
  return best;
}

double vladimirov_bound(const AnalyticFunction& f) {
  return (1.0 + std::sqrt(2.0)) / 2.0 * std::abs(f(Complex(0.0, 1.0)));
}

std::string SimpleScanReport::diagnosis() const {
  std::ostringstream out;
  const std::string where = at_infinity ? "infinity (near 0 in the inversion chart)"
                                        : "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
  if (bounded) out << "bounded near " << where;
  else out << "non-simple behavior near " << where << ": growing like y^-" << alpha;
  return out.str();
}

nlohmann::json SimpleScanReport::to_json() const {
  nlohmann::json prof = nlohmann::json::array();
  for (const auto& [y, s] : profile) prof.push_back({y, s});
  return {{"window", {real_to_json(lo), real_to_json(hi)}},   {"at_infinity", at_infinity}, {"sup_weighted", sup_weighted},
          {"alpha", alpha},       {"bounded", bounded},         {"diagnosis", diagnosis()},
          {"profile", prof}};
}

SimpleScanReport simple_scan(const AnalyticFunction& f, double lo, double hi, double y_floor,
                             int growth_order) {
  if (f.picture() != Picture::half_plane) throw DomainError("simple_scan: half-plane picture required");
  if (!(y_floor > 0.0 && y_floor < 0.1)) throw DomainError("simple_scan: y_floor must lie in (0, 0.1)");
  SimpleScanReport rep;
  rep.lo = lo;
  rep.hi = hi;
  rep.at_infinity = std::isinf(lo) || std::isinf(hi);
  const AnalyticFunction g = rep.at_infinity ? invert_variable(f) : f;
  const double xlo = rep.at_infinity ? -0.5 : lo, xhi = rep.at_infinity ? 0.5 : hi;

  std::vector<double> xs;
  const int nx = 61;
  for (int i = 0; i < nx; ++i) xs.push_back(xlo + (xhi - xlo) * i / (nx - 1));
  for (double p : g.support().breakpoints_in(xlo, xhi)) xs.push_back(p);
  if (rep.at_infinity) xs.push_back(0.0);

  const int per_decade = 5;
  const int decades = static_cast<int>(std::ceil(-std::log10(y_floor)));
  std::vector<double> ys;
  for (int k = 0; k <= decades * per_decade; ++k) ys.push_back(y_floor * std::pow(10.0, double(k) / per_decade));

  std::vector<double> sup(ys.size(), 0.0), weighted(ys.size(), 0.0);
  parallel_for(ys.size(), [&](std::size_t k) {
    const double y = ys[k];
    for (double x : xs) {
      for (double side : {1.0, -1.0}) {
        const Complex z(x, side * y);
        const double a = std::abs(g(z));
        sup[k] = std::max(sup[k], std::pow(y, growth_order) * a);
        weighted[k] = std::max(weighted[k], y / (1.0 + std::norm(z)) * a);
      }
    }
  });
  for (std::size_t k = 0; k < ys.size(); ++k) rep.profile.emplace_back(ys[k], sup[k]);
  rep.sup_weighted = *std::max_element(weighted.begin(), weighted.end());

  // Least squares slope of log sup against log y over the lowest decade.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(per_decade) && k < ys.size(); ++k) {
    if (!(sup[k] > 0.0) || !std::isfinite(sup[k])) continue;
    const double lx = std::log(ys[k]), ly = std::log(sup[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  double slope = 0.0;
  if (n >= 2) slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  for (double s : sup)
    if (!std::isfinite(s)) slope = -kInf;
  rep.alpha = std::max(0.0, -slope);
  rep.bounded = rep.alpha <= 0.1;
  return rep;
}

double boundary_norm(const AnalyticFunction& f, double y) {
  auto integrand = [&](double x) {
    return Complex(std::abs(f(Complex(x, y)) - f(Complex(x, -y))) / (1.0 + x * x), 0.0);
  };
  std::vector<double> cuts = boundary_breakpoints(f, -kInf, kInf, y);
  cuts.push_back(0.0);
  quad::Options o = extraction_quadrature();
  o.abs_tol = 1e-12;
  return quad::integrate(integrand, -kInf, kInf, cuts, o).value.real();
}

double residue_identity_quadrature(double s, double y) {
  auto integrand = [s, y](double x) {
    return Complex(2.0 * y / ((1.0 + x * x) * ((s - x) * (s - x) + y * y)), 0.0);
  };
  std::vector<double> cuts = quad::graded_breakpoints(s, y, -kInf, kInf, 16.0);
  const auto more = quad::graded_breakpoints(0.0, 1.0, -kInf, kInf, 16.0);
  cuts.insert(cuts.end(), more.begin(), more.end());
  quad::Options o;
  o.abs_tol = 1e-15;
  o.rel_tol = 1e-14;
  return quad::integrate(integrand, -kInf, kInf, cuts, o).value.real();
}

double residue_identity_closed_form(double s, double y) {
  return 2.0 * kPi * (y + 1.0) / (s * s + (y + 1.0) * (y + 1.0));
}

}  // namespace herglotz
