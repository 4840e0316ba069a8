// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed here.
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "herglotz/catalog.hpp"
#include "herglotz/circle_line.hpp"
#include "herglotz/distribution.hpp"
#include "herglotz/extraction.hpp"
#include "herglotz/reconstruction.hpp"

using namespace herglotz;

namespace {

const Complex I(0.0, 1.0);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << x;
  return s.str();
}

Outcome within(double worst, double tol, const std::string& what) {
  return {worst <= tol, what + " " + sci(worst) + (worst <= tol ? " <= " : " > ") + sci(tol)};
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

AnalyticFunction cat(CatalogKind k, Complex p = {}) { return catalog_build(CatalogSpec::of(k, p)); }

template <class F>
Complex simpson(F&& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  Complex s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

ReconstructionSpec window_spec(double lo, double hi, std::vector<double> sigma, bool inf, double far) {
  ReconstructionSpec s;
  s.window_lo = lo;
  s.window_hi = hi;
  s.sigma = std::move(sigma);
  s.include_infinity = inf;
  s.far_field = far;
  return s;
}

TestFunction finite_bump(double a, double b, Complex height, std::vector<Complex> poly) {
  TestFunction t = TestFunction::bump(a, b, height, std::move(poly));
  t.with_value_at_infinity(0.0);
  return t;
}

Outcome check_tangent_atoms() {
  const AnalyticFunction f = cat(CatalogKind::tan);
  double worst = 0.0;
  for (int n : {-5, -3, -1, 1, 3, 5}) {
    const double x = kPi * n / 2;
    worst = std::max(worst, rel(atomic_mass_at(f, x), 1.0 / (1.0 + x * x)));
  }
  return within(worst, 1e-6, "max relative error");
}

Outcome check_power_density() {
  struct Bump {
    double a, b;
    Complex h;
    std::vector<Complex> poly;
  };
  const std::vector<Bump> bumps{{-4.0, -1.0, 1.0, {1.0}},
                                {-3.5, -1.5, Complex(0.5, 1.0), {1.0, 0.3}},
                                {-4.0, -2.0, 2.0, {0.0, 1.0}},
                                {-2.5, -1.0, Complex(0, 1), {1.0, Complex(0, 0.5), 0.2}},
                                {-3.0, -1.2, 1.0, {2.0, -1.0}}};
  double worst = 0.0;
  for (Complex p : {Complex(0.5), Complex(-0.5), Complex(0.3, 0.4)}) {
    const AnalyticFunction f = cat(CatalogKind::power, p);
    for (const auto& bp : bumps) {
      const TestFunction t = TestFunction::bump(bp.a, bp.b, bp.h, bp.poly);
      const Complex want = simpson(
          [&](double x) { return t(x) * std::pow(Complex(-x), p) * std::sin(kPi * p) / (kPi * (1 + x * x)); }, bp.a,
          bp.b);
      worst = std::max(worst, rel(extract_functional(f, t).require("power functional").value, want));
    }
  }
  return within(worst, 1e-6, "max relative error over 15 pairings");
}

Outcome check_power_log_density() {
  double worst = 0.0;
  for (double p : {0.0, 0.5}) {
    const AnalyticFunction f = cat(CatalogKind::power_log, p);
    for (double x : {-0.5, -2.0}) {
      const double ax = std::abs(x);
      const double want = (std::sin(kPi * p) * std::log(ax) / kPi + std::cos(kPi * p)) * std::pow(ax, p) / (1 + x * x);
      worst = std::max(worst, std::abs(density_at(f, x).require("power-log density").value - want));
    }
  }
  return within(worst, 1e-6, "max abs error");
}

Outcome check_inverse_log_pole() {
  const ReconstructionResult r =
      reconstruct(cat(CatalogKind::power_over_log, 0.0), window_spec(-4, 4, {0.0, 1.0}, true, 1e10));
  return within(std::abs(r.measure.atom_mass(1.0) + 0.5), 1e-8, "|mass(1) + 1/2|");
}

Outcome check_tan_sigma_log_atoms() {
  // at e^{pi n/(2 sigma)} the tangent carries the odd-n atoms and the cotangent the even-n ones
  double worst = 0.0;
  for (double sigma : {1.0, 2.0}) {
    const AnalyticFunction t = catalog_build(CatalogSpec::with_sigma(CatalogKind::tan_sigma_log, sigma));
    const AnalyticFunction c = catalog_build(CatalogSpec::with_sigma(CatalogKind::cot_sigma_log, sigma));
    for (int n = -2; n <= 2; ++n) {
      const double e = kPi * n / (2 * sigma);
      const double want = ((n + 1) % 2 == 0 ? 1.0 : -1.0) / sigma / (std::exp(e) + std::exp(-e));
      const double x = std::exp(e);
      const Complex got = (n % 2 != 0 ? atomic_mass_at(t, x) : atomic_mass_at(c, x));
      worst = std::max(worst, std::abs(got - want) / std::abs(want));
      const Atom closed = tan_sigma_log_masses(sigma, {n}).front();
      worst = std::max(worst, std::abs(closed.mass - want) / std::abs(want));
    }
  }
  return within(worst, 1e-6, "max relative error");
}

Outcome check_vladimirov() {
  BoundaryMeasure pos;
  pos.add_atom(-1.0, 0.5);
  pos.add_atom(2.0, 1.5);
  pos.add_atom(kInf, 0.25);
  const std::vector<AnalyticFunction> fs{
      cat(CatalogKind::tan),
      cat(CatalogKind::power, 0.1),
      cat(CatalogKind::power, 0.5),
      cat(CatalogKind::power, 0.9),
      catalog_build(CatalogSpec::with_sigma(CatalogKind::tan_sigma_log, 1.0)),
      catalog_build(CatalogSpec::with_sigma(CatalogKind::tan_sigma_log, 2.0)),
      cauchy_function(pos, 0.3)};
  double excess = -kInf;
  for (const auto& f : fs) excess = std::max(excess, vladimirov_norm(f) - vladimirov_bound(f));
  const AnalyticFunction ci([](Complex) { return I; }, Picture::half_plane);
  const double half = std::abs(vladimirov_norm(ci) - 0.5);
  const bool pass = excess <= 1e-9 && half <= 1e-9;
  return {pass, "max(norm - bound) " + sci(excess) + " over 7 endofunctions, |norm(i) - 1/2| " + sci(half)};
}

Outcome check_residue_identity() {
  double worst = 0.0;
  for (double s : {-3.0, 0.0, 2.0})
    for (double y : {1.0, 0.5, 0.1})
      worst = std::max(worst, std::abs(residue_identity_quadrature(s, y) - residue_identity_closed_form(s, y)));
  return within(worst, 1e-10, "max abs error over 9 pairs");
}

Outcome check_norm_bound() {
  // unit atom at 0 plus the z^{1/2} density; constant 0. In closed form this is
  // z^{1/2} - cos(pi/4) - 1/z, checked against the Cauchy transform first.
  BoundaryMeasure m;
  m.add_atom(0.0, 1.0);
  m.add_density(density_from_json({{"kind", "catalog-power"}, {"p", {0.5, 0.0}}, {"support", {"-inf", 0.0}}}));
  m.allow_overlap = true;
  const AnalyticFunction sq = cat(CatalogKind::power, 0.5);
  BoundarySupport supp = sq.support();
  supp.points.push_back(0.0);
  const AnalyticFunction f([sq](Complex z) { return sq(z) - std::cos(kPi / 4) - 1.0 / z; }, Picture::half_plane,
                           supp);
  double agree = 0.0;
  for (Complex z : {Complex(0.3, 0.8), Complex(-2, -0.4), Complex(1, 3)})
    agree = std::max(agree, std::abs(f(z) - cauchy_eval(m, 0.0, z)));
  if (agree > 1e-9) return {false, "closed form disagrees with the Cauchy transform by " + sci(agree)};
  const double tv = total_variation(m), tv_line = total_variation(m, true);
  double slack = kInf;
  for (double y : {1.0, 0.1, 0.01})
    slack = std::min(slack, 2 * kPi * y * tv + 2 * kPi * tv_line + 1e-8 - boundary_norm(f, y));
  return {slack >= 0.0, "min slack " + sci(slack) + " at y in {1, 0.1, 0.01}"};
}

Complex phi_closed_form(double x, double a, double b) {
  auto xlog = [](double t) { return t == 0.0 ? 0.0 : t * std::log(std::abs(t)); };
  const double wa = (b - x) / (b - a), wb = (x - a) / (b - a);
  const double re = -xlog(x) + wa * xlog(a) + wb * xlog(b);
  const double im = -kPi * std::min(0.0, x) + kPi * std::min(0.0, a) * wa + kPi * std::min(0.0, b) * wb;
  return {re, im};
}

Outcome check_phi_kernel() {
  const AnalyticFunction f = catalog_build(CatalogSpec::rational_of(0, 0, {0.0}, {1.0}));
  const PhiProfile p1 = phi_profile(f, -1, 1, 0.25), p2 = phi_profile(f, -1, 1, 0.5);
  double closed = 0.0, cutoff = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double t = -1.0 + k / 10.0;
    closed = std::max({closed, std::abs(p1(t) - phi_closed_form(t, -1, 1)), std::abs(p2(t) - phi_closed_form(t, -1, 1))});
    cutoff = std::max(cutoff, std::abs(p1(t) - p2(t)));
  }
  const double ends = std::max({std::abs(p1(-1.0)), std::abs(p1(1.0)), std::abs(p2(-1.0)), std::abs(p2(1.0))});
  const bool pass = closed <= 1e-8 && cutoff <= 1e-8 && ends <= 1e-8;
  return {pass, "closed form " + sci(closed) + ", delta spread " + sci(cutoff) + ", ends " + sci(ends) + " (tol 1e-8)"};
}

Outcome check_circle_line() {
  const double g1 = consistency_gap(cat(CatalogKind::tan), TestFunction::bump(0.2, 1.3)).gap();
  const double g2 = consistency_gap(cat(CatalogKind::power, 0.5), TestFunction::bump(-4.0, -1.0)).gap();
  const double g3 =
      joined_distribution_check(catalog_build(CatalogSpec::rational_of(0, 0, {0.0}, {1.0})), TestFunction::constant(1.0))
          .gap();
  const bool pass = g1 <= 1e-4 && g2 <= 1e-4 && g3 <= 1e-4;
  return {pass, "gaps tan " + sci(g1) + ", sqrt " + sci(g2) + ", joined -1/z " + sci(g3) + " (tol 1e-4)"};
}

Outcome check_duality() {
  const AnalyticFunction f = catalog_build(CatalogSpec::rational_of(0, 0, {0.0}, {1.0}));
  double worst = 0.0;
  for (auto [a, b] : {std::pair{1.0, 4.0}, std::pair{1.5, 2.5}, std::pair{1.1, 3.0}})
    worst = std::max(worst, inversion_duality_gap(f, TestFunction::bump(a, b, 1.0, {1.0, 0.5})).gap());
  return within(worst, 1e-8, "max gap over 3 tests");
}

Outcome check_mobius_covariance() {
  const AnalyticFunction f = cat(CatalogKind::power, 0.5);
  const ReconstructionResult base = reconstruct(f, window_spec(-6, 1, {0.0}, true, 1e10));
  struct Case {
    const char* name;
    MobiusMatrix A;
    ReconstructionSpec spec;
  };
  const std::vector<Case> cases{
      {"translation", MobiusMatrix::translation(1.0), window_spec(-7, 1, {-1.0}, true, 1e10)},
      {"dilation", MobiusMatrix(2, 0, 0, 1), window_spec(-6, 1, {0.0}, true, 1e10)},
      {"inversion", MobiusMatrix::inversion(), window_spec(-6, 1, {0.0}, true, 1e10)}};
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> start(-5.5, 0.0), width(0.5, 2.0), u(-1.0, 1.0);
  std::ostringstream detail;
  double worst = 0.0;
  for (const auto& c : cases) {
    const ReconstructionResult moved = reconstruct(compose_mobius(f, c.A), c.spec);
    const BoundaryMeasure push = pushforward_mobius(base.measure, c.A);
    double w = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double a = start(rng);
      const TestFunction t = finite_bump(a, a + width(rng), Complex(u(rng), u(rng)), {1.0, Complex(u(rng), u(rng))});
      w = std::max(w, std::abs(integrate(moved.measure, t) - integrate(push, t)));
    }
    detail << c.name << ' ' << sci(w) << ' ';
    worst = std::max(worst, w);
  }
  return {worst <= 1e-4, "max pairing gap: " + detail.str() + "(tol 1e-4)"};
}

Outcome check_resynthesis() {
  const AnalyticFunction sq = cat(CatalogKind::power, 0.5);
  const double r1 = resynthesis_residual(sq, reconstruct(sq, window_spec(-6, 1, {0.0}, true, 1e10)),
                                         {I, 2.0 * I, Complex(-1, 2)});
  const AnalyticFunction mi = catalog_build(CatalogSpec::rational_of(0, 0, {0.0}, {1.0}));
  const double r2 =
      resynthesis_residual(mi, reconstruct(mi, window_spec(-2, 2, {0.0}, false, 0.0)), {2.0 * I, -3.0 * I, Complex(1, 1)});
  const AnalyticFunction tn = cat(CatalogKind::tan);
  std::vector<double> poles;
  for (int n : {-5, -3, -1, 1, 3, 5}) poles.push_back(kPi * n / 2);
  const double r3 = resynthesis_residual(tn, reconstruct(tn, window_spec(-8, 8, poles, true, 0.0)), {2.0 * I});
  const bool pass = r1 <= 1e-4 && r2 <= 1e-10 && r3 <= 1e-3;
  return {pass, "residuals z^(1/2) " + sci(r1) + " (tol 1e-4), -1/z " + sci(r2) + " (tol 1e-10), tan " + sci(r3) +
                    " (tol 1e-3)"};
}

Outcome check_infinity_blindness() {
  const AnalyticFunction id = catalog_build(CatalogSpec::rational_of(1.0, 0.0, {}, {}));
  const double line = std::abs(extract_functional(id, TestFunction::constant(1.0)).value);
  const double inf = std::abs(atomic_mass_at_infinity(id) - 1.0);
  return {line <= 1e-8 && inf <= 1e-10,
          "|line functional| " + sci(line) + " (tol 1e-8), |mass(inf) - 1| " + sci(inf) + " (tol 1e-10)"};
}

Outcome check_c02_norms() {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(0, 6);
  double worst = -kInf;  // largest ratio minus one over both inequalities
  for (int trial = 0; trial < 100; ++trial) {
    const double a = 5 * u(rng), b = a + 0.1 + 3 * std::abs(u(rng));
    std::vector<Complex> c(deg(rng) + 1);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    const C02Function h = normalized_antiderivative(
        [c](double x) {
          Complex v = 0;
          for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
          return v;
        },
        a, b);
    double nh = 0, ndh = 0, nH = 0;
    for (int k = 0; k <= 1000; ++k) {
      const double x = a + (b - a) * k / 1000.0;
      nh = std::max(nh, std::abs(h.h(x)));
      ndh = std::max(ndh, std::abs(h.dh(x)));
      nH = std::max(nH, std::abs(h.H(x)));
    }
    worst = std::max({worst, ndh / (1.5 * (b - a) * nH) - 1.0, nh / ((b - a) * ndh) - 1.0});
  }
  return {worst <= 0.0, "largest norm ratio minus one " + sci(worst) + " over 100 random H"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"tangent atoms", check_tangent_atoms},
      {"power density", check_power_density},
      {"z^p log z density", check_power_log_density},
      {"1/log z pole", check_inverse_log_pole},
      {"tan(sigma log z) atoms", check_tan_sigma_log_atoms},
      {"Vladimirov bound", check_vladimirov},
      {"residue identity", check_residue_identity},
      {"boundary norm bound", check_norm_bound},
      {"Phi kernel", check_phi_kernel},
      {"circle-line compatibility", check_circle_line},
      {"inversion duality", check_duality},
      {"Mobius covariance", check_mobius_covariance},
      {"resynthesis", check_resynthesis},
      {"infinity blindness", check_infinity_blindness},
      {"C02 norms", check_c02_norms},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << k + 1 << ": " << criteria[k].first << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
