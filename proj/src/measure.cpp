#include "herglotz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace herglotz {

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<Complex> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  const std::size_t n = xs_.size();
  if (n != ys_.size() || n < 2) throw DomainError("table needs at least two matching nodes");
  for (std::size_t i = 1; i < n; ++i)
    if (!(xs_[i] > xs_[i - 1])) throw DomainError("table nodes must be strictly increasing");
  slopes_.assign(n, Complex{});
  // Fritsch-Carlson slopes, one component at a time.
  for (int part = 0; part < 2; ++part) {
    auto comp = [&](std::size_t i) { return part == 0 ? ys_[i].real() : ys_[i].imag(); };
    std::vector<double> delta(n - 1), m(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (comp(i + 1) - comp(i)) / (xs_[i + 1] - xs_[i]);
    m[0] = delta[0];
    m[n - 1] = delta[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) continue;
      const double h0 = xs_[i] - xs_[i - 1], h1 = xs_[i + 1] - xs_[i];
      const double w1 = 2.0 * h1 + h0, w2 = h1 + 2.0 * h0;
      m[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (part == 0) slopes_[i].real(m[i]);
      else slopes_[i].imag(m[i]);
    }
  }
}

Complex MonotoneCubic::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  const std::size_t i = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin() - 1;
  const double h = xs_[i + 1] - xs_[i];
  const double s = (x - xs_[i]) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
  return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
}

BoundaryMeasure& BoundaryMeasure::add_atom(double loc, Complex mass) {
  if (picture_ == MeasurePicture::line && std::isinf(loc)) loc = kInf;
  if (loc == 0.0) loc = 0.0;  // no signed zeros in files
  if (picture_ == MeasurePicture::circle) {
    // canonical angle in (-pi, pi]
    loc = std::remainder(loc, 2.0 * kPi);
    if (loc <= -kPi) loc += 2.0 * kPi;
  }
  for (auto& a : atoms_) {
    if (a.loc == loc) {
      a.mass += mass;
      return *this;
    }
  }
  atoms_.push_back({loc, mass});
  return *this;
}

BoundaryMeasure& BoundaryMeasure::add_density(DensityPart part) {
  if (!(part.lo < part.hi)) throw DomainError("density support must have lo < hi");
  densities_.push_back(std::move(part));
  return *this;
}

Complex BoundaryMeasure::atom_mass(double loc) const {
  for (const auto& a : atoms_)
    if (a.loc == loc || (std::isinf(loc) && std::isinf(a.loc))) return a.mass;
  return 0.0;
}

void BoundaryMeasure::validate() const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i].loc == atoms_[j].loc) throw DomainError("duplicate atom location");
  if (allow_overlap) return;
  for (const auto& a : atoms_) {
    if (a.mass == Complex{}) continue;
    for (const auto& d : densities_) {
      if (a.loc > d.lo && a.loc < d.hi && d.density(a.loc) != Complex{})
        throw DomainError("atom at " + std::to_string(a.loc) + " inside a density support");
    }
  }
}

quad::Options measure_quadrature() {
  quad::Options o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-11;
  return o;
}

Complex integrate_against(const BoundaryMeasure& m, const std::function<Complex(double)>& g,
                          std::optional<Complex> g_at_infinity,
                          const std::vector<double>& extra_breakpoints, const quad::Options& opts) {
  Complex total{};
  for (const auto& a : m.atoms()) {
    if (a.mass == Complex{}) continue;
    if (std::isinf(a.loc)) {
      if (!g_at_infinity) throw DomainError("measure has an atom at infinity; integrand lacks a value there");
      total += *g_at_infinity * a.mass;
    } else {
      total += g(a.loc) * a.mass;
    }
  }
  for (const auto& d : m.densities()) {
    std::vector<double> cuts = d.breakpoints;
    cuts.insert(cuts.end(), extra_breakpoints.begin(), extra_breakpoints.end());
    auto integrand = [&](double x) {
      const Complex gx = g(x);
      return gx == Complex{} ? Complex{} : gx * d.density(x);
    };
    total += quad::integrate(integrand, d.lo, d.hi, std::move(cuts), opts, quad::Rule::mixed).value;
  }
  return total;
}

Complex integrate(const BoundaryMeasure& m, const TestFunction& f) {
  Complex total{};
  for (const auto& a : m.atoms()) {
    if (a.mass == Complex{}) continue;
    if (std::isinf(a.loc) && m.picture() == MeasurePicture::line) {
      if (!f.value_at_infinity())
        throw DomainError("measure has an atom at infinity; test function has no value there");
      total += *f.value_at_infinity() * a.mass;
    } else {
      total += f(a.loc) * a.mass;
    }
  }
  for (const auto& d : m.densities()) {
    const double lo = std::max(d.lo, f.lo()), hi = std::min(d.hi, f.hi());
    if (!(lo < hi)) continue;
    auto integrand = [&](double x) { return f(x) * d.density(x); };
    total += quad::integrate(integrand, lo, hi, d.breakpoints, measure_quadrature(), quad::Rule::mixed).value;
  }
  return total;
}

double pushforward_weight(const MobiusMatrix& A, double t) {
  const double a = A.a(), b = A.b(), c = A.c(), d = A.d();
  if (std::isinf(t)) return a * a + c * c;
  const double p = a * t + b, q = c * t + d;
  return (p * p + q * q) / (1.0 + t * t);
}

BoundaryMeasure pushforward_mobius(const BoundaryMeasure& m, const MobiusMatrix& A) {
  if (m.picture() != MeasurePicture::line) throw DomainError("pushforward: line picture only");
  BoundaryMeasure out(MeasurePicture::line);
  out.allow_overlap = m.allow_overlap;
  const MobiusMatrix Ainv = A.inverse();
  const double det = A.det();
  const double a = A.a(), b = A.b(), c = A.c(), d = A.d();

  for (const auto& atom : m.atoms()) {
    double t;
    if (std::isinf(atom.loc)) {
      t = (c == 0.0) ? kInf : -d / c;
    } else {
      bool at_inf = false;
      t = mobius_apply_real(Ainv, atom.loc, &at_inf);
      if (at_inf) t = kInf;
    }
    out.add_atom(t, atom.mass * pushforward_weight(A, t) / det);
  }

  const double sign = det > 0.0 ? 1.0 : -1.0;
  for (const auto& part : m.densities()) {
    auto base = part.density;
    // sign(det) W(t) rho(A.t) / (ct+d)^2 = sign(det) (1+s^2)/(1+t^2) rho(s), s = A.t
    auto rho = [base, a, b, c, d, sign](double t) -> Complex {
      const double q = c * t + d;
      if (q == 0.0) return 0.0;
      const double s = (a * t + b) / q;
      if (!std::isfinite(s)) return 0.0;
      const Complex v = base(s);
      if (v == Complex{}) return v;
      return sign * ((1.0 + s * s) / (1.0 + t * t)) * v;
    };
    std::vector<double> cuts;
    for (double s : part.breakpoints) {
      bool at_inf = false;
      const double t = mobius_apply_real(Ainv, s, &at_inf);
      if (!at_inf) cuts.push_back(t);
    }
    for (const auto& [lo, hi] : mobius_image_interval(Ainv, part.lo, part.hi)) {
      if (!(lo < hi)) continue;
      DensityPart np;
      np.lo = lo;
      np.hi = hi;
      np.density = rho;
      for (double t : cuts)
        if (t > lo && t < hi) np.breakpoints.push_back(t);
      np.descriptor = {{"kind", "pushforward"},
                       {"matrix", {a, b, c, d}},
                       {"base", part.descriptor},
                       {"support", {real_to_json(lo), real_to_json(hi)}}};
      out.add_density(std::move(np));
    }
  }
  return out;
}

BoundaryMeasure conjugate(const BoundaryMeasure& m) {
  BoundaryMeasure out(m.picture());
  out.allow_overlap = m.allow_overlap;
  for (const auto& a : m.atoms()) out.add_atom(a.loc, std::conj(a.mass));
  for (const auto& part : m.densities()) {
    DensityPart np = part;
    np.density = [base = part.density](double x) { return std::conj(base(x)); };
    np.descriptor = {{"kind", "conjugate"}, {"base", part.descriptor}};
    out.add_density(std::move(np));
  }
  return out;
}

double total_variation(const BoundaryMeasure& m, bool finite_only) {
  double tv = 0.0;
  for (const auto& a : m.atoms()) {
    if (finite_only && std::isinf(a.loc)) continue;
    tv += std::abs(a.mass);
  }
  for (const auto& d : m.densities()) {
    auto integrand = [&](double x) { return Complex(std::abs(d.density(x)), 0.0); };
    tv += quad::integrate(integrand, d.lo, d.hi, d.breakpoints, measure_quadrature(), quad::Rule::mixed)
              .value.real();
  }
  return tv;
}

Complex power_density(Complex p, double x) {
  if (!(x < 0.0)) return 0.0;
  const double u = -x;
  return std::exp(p * std::log(u)) * std::sin(kPi * p) / (kPi * (1.0 + x * x));
}

Complex power_log_density(Complex p, double x) {
  if (!(x < 0.0)) return 0.0;
  const double L = std::log(-x);
  return (std::sin(kPi * p) * L / kPi + std::cos(kPi * p)) * std::exp(p * L) / (1.0 + x * x);
}

Complex power_over_log_density(Complex p, double x) {
  if (!(x < 0.0)) return 0.0;
  const double L = std::log(-x);
  const Complex I(0.0, 1.0);
  const Complex jump = std::exp(I * kPi * p) / Complex(L, kPi) - std::exp(-I * kPi * p) / Complex(L, -kPi);
  return std::exp(p * L) * jump / (2.0 * kPi * I * (1.0 + x * x));
}

nlohmann::json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x + 0.0;  // no negative zero in output
}

double json_real(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    throw DomainError("bad real value: " + s);
  }
  return j.get<double>();
}

Complex json_complex(const nlohmann::json& j) {
  if (j.is_array()) return {j.at(0).get<double>(), j.at(1).get<double>()};
  return {j.get<double>(), 0.0};
}

nlohmann::json complex_to_json(Complex z) { return {z.real() + 0.0, z.imag() + 0.0}; }

DensityPart table_density(std::vector<double> xs, std::vector<Complex> vals) {
  auto interp = std::make_shared<MonotoneCubic>(xs, vals);
  DensityPart part;
  part.lo = xs.front();
  part.hi = xs.back();
  part.density = [interp](double x) { return (*interp)(x); };
  part.breakpoints.assign(xs.begin() + 1, xs.end() - 1);
  nlohmann::json jv = nlohmann::json::array();
  for (const auto& v : vals) jv.push_back({v.real(), v.imag()});
  part.descriptor = {{"kind", "table"}, {"xs", xs}, {"vals", jv}};
  return part;
}

DensityPart density_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "table") {
    std::vector<double> xs = j.at("xs").get<std::vector<double>>();
    std::vector<Complex> vals;
    for (const auto& v : j.at("vals")) vals.push_back(json_complex(v));
    return table_density(std::move(xs), std::move(vals));
  }
  if (kind == "pushforward") {
    const auto& mj = j.at("matrix");
    const MobiusMatrix A(mj.at(0), mj.at(1), mj.at(2), mj.at(3));
    DensityPart base = density_from_json(j.at("base"));
    BoundaryMeasure tmp;
    tmp.add_density(std::move(base));
    const double lo = json_real(j.at("support").at(0)), hi = json_real(j.at("support").at(1));
    for (const auto& part : pushforward_mobius(tmp, A).densities())
      if (part.lo == lo && part.hi == hi) return part;
    throw DomainError("pushforward descriptor: support does not match the transported base");
  }
  if (kind == "conjugate") {
    BoundaryMeasure tmp;
    tmp.add_density(density_from_json(j.at("base")));
    return conjugate(tmp).densities().front();
  }

  DensityPart part;
  const auto& sj = j.at("support");
  part.lo = json_real(sj.at(0));
  part.hi = json_real(sj.at(1));
  const Complex p = j.contains("p") ? json_complex(j.at("p")) : Complex{};
  if (kind == "catalog-power") {
    part.density = [p](double x) { return power_density(p, x); };
  } else if (kind == "catalog-power-log") {
    part.density = [p](double x) { return power_log_density(p, x); };
  } else if (kind == "catalog-power-over-log") {
    part.density = [p](double x) { return power_over_log_density(p, x); };
  } else {
    throw DomainError("unknown density kind: " + kind);
  }
  if (part.hi > 0.0) part.breakpoints.push_back(0.0);
  if (part.lo < -1.0 && part.hi > -1.0) part.breakpoints.push_back(-1.0);
  part.descriptor = j;
  return part;
}

}  // namespace herglotz
