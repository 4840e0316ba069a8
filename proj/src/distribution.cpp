#include "herglotz/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "herglotz/extraction.hpp"
#include "herglotz/parallel.hpp"
#include "herglotz/quadrature.hpp"
#include "herglotz/serialization.hpp"

namespace herglotz {
namespace {

const Complex I(0.0, 1.0);

quad::Options tight() {
  quad::Options o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-13;
  o.max_intervals = 8000;
  return o;
}

// Singular locations of f strictly inside (a, b).
std::vector<double> interior_singularities(const AnalyticFunction& f, double a, double b) {
  std::vector<double> out;
  for (double p : f.support().breakpoints_in(a, b))
    if (p > a && p < b) out.push_back(p);
  return out;
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

C02Function::C02Function(std::function<Complex(double)> H, double a, double b)
    : H_(std::make_shared<const std::function<Complex(double)>>(std::move(H))), a_(a), b_(b) {
  if (!(a < b)) throw DomainError("C02Function: need a < b");
  J_ = moment(b);
}

Complex C02Function::moment(double x) const {
  if (x <= a_) return 0.0;
  const auto& H = *H_;
  return quad::gauss_kronrod([&](double t) { return (x - t) * H(t); }, a_, x, tight()).value;
}

Complex C02Function::h(double x) const {
  if (x <= a_ || x >= b_) return 0.0;
  return moment(x) - ((x - a_) / (b_ - a_)) * J_;
}

Complex C02Function::dh(double x) const {
  x = std::clamp(x, a_, b_);
  const auto& H = *H_;
  const Complex first = x > a_ ? quad::gauss_kronrod(H, a_, x, tight()).value : Complex{};
  return first - J_ / (b_ - a_);
}

C02Function C02Function::conj() const {
  auto H = H_;
  return C02Function([H](double t) { return std::conj((*H)(t)); }, a_, b_);
}

TestFunction C02Function::as_test_function() const {
  const C02Function self = *this;
  TestFunction t([self](double x) { return self.h(x); }, a_, b_, Smoothness::c2);
  t.with_derivatives(
      [self](double x, int k) -> Complex {
        switch (k) {
          case 1: return self.dh(x);
          case 2: return self.H(x);
          default: return self.h(x);
        }
      },
      2);
  return t;
}

C02Function normalized_antiderivative(std::function<Complex(double)> H, double a, double b) {
  return C02Function(std::move(H), a, b);
}

Complex cutoff_moment(const AnalyticFunction& f, double x, double delta, int m, Side side) {
  if (!(delta > 0.0)) throw DomainError("cutoff must be positive");
  const double sgn = side == Side::upper ? 1.0 : -1.0;
  auto integrand = [&](double t) { return std::pow(t, m) * f(Complex(x, sgn * t)); };
  // The integrand turns over at heights comparable to the distance to nearby singular points.
  std::vector<double> cuts;
  for (double p : f.support().breakpoints_in(x - delta, x + delta)) {
    const double d = std::abs(x - p);
    if (d == 0.0 || d >= delta) continue;
    for (double s = d; s > d * 1e-6; s *= 0.5) cuts.push_back(s);
    for (double s = 2.0 * d; s < delta; s *= 2.0) cuts.push_back(s);
  }
  return quad::integrate(integrand, 0.0, delta, cuts, tight(), quad::Rule::mixed).value;
}

Complex boundary_functional(const AnalyticFunction& f, const C02Function& h, double delta, Side side) {
  if (side == Side::lower) return std::conj(boundary_functional(star_reflect(f), h.conj(), delta, Side::upper));
  const double a = h.a(), b = h.b();
  const std::vector<double> cuts = interior_singularities(f, a, b);
  auto F = [&](double x) { return f(Complex(x, delta)); };

  const Complex t1 = quad::integrate([&](double x) { return h.h(x) * F(x); }, a, b, cuts, tight()).value;
  const Complex t2 =
      I * delta * quad::integrate([&](double x) { return h.dh(x) * F(x); }, a, b, cuts, tight()).value;
  const Complex t3 = h.dh(b) * cutoff_moment(f, b, delta) - h.dh(a) * cutoff_moment(f, a, delta);
  const Complex t4 =
      quad::integrate([&](double x) { return h.H(x) * cutoff_moment(f, x, delta); }, a, b, cuts, tight(),
                      quad::Rule::tanh_sinh)
          .value;
  return t1 + t2 + t3 - t4;
}

namespace {

struct PhiTerms {
  double a, b, delta;
  Complex M;       // int_a^b (x + i delta - a) f(x + i delta) dx
  Complex Ga, Gb;  // cutoff moments at the ends
};

Complex phi_with(const AnalyticFunction& f, const PhiTerms& c, double t) {
  const double a = c.a, b = c.b, delta = c.delta;
  const std::vector<double> cuts = interior_singularities(f, t, b);
  const Complex T1 =
      t < b ? quad::integrate([&](double x) { return (Complex(x, delta) - t) * f(Complex(x, delta)); }, t, b,
                              cuts, tight())
                  .value
            : Complex{};
  const double wl = (b - t) / (b - a), wr = (t - a) / (b - a);
  const Complex T5 = (t == a) ? c.Ga : (t == b) ? c.Gb : cutoff_moment(f, t, delta);
  return T1 - wl * c.M + wr * c.Gb + wl * c.Ga - T5;
}

PhiTerms phi_terms(const AnalyticFunction& f, double a, double b, double delta) {
  if (!(a < b)) throw DomainError("phi: need a < b");
  PhiTerms c{a, b, delta, {}, {}, {}};
  c.M = quad::integrate([&](double x) { return (Complex(x, delta) - a) * f(Complex(x, delta)); }, a, b,
                        interior_singularities(f, a, b), tight())
            .value;
  c.Ga = cutoff_moment(f, a, delta);
  c.Gb = cutoff_moment(f, b, delta);
  return c;
}

constexpr int kGrading = 6;

}  // namespace

Complex phi_value(const AnalyticFunction& f, double a, double b, double delta, double t) {
  if (t < a || t > b) throw DomainError("phi: t outside [a, b]");
  return phi_with(f, phi_terms(f, a, b, delta), t);
}

double PhiProfile::graded_node(double u, double lo, double hi, int q) {
  const double s = 0.5 * (1.0 + u);
  const double p = std::pow(s, q), r = std::pow(1.0 - s, q);
  return lo + (hi - lo) * p / (p + r);
}

double PhiProfile::graded_node_derivative(double u, double lo, double hi, int q) {
  const double s = 0.5 * (1.0 + u);
  const double p = std::pow(s, q), r = std::pow(1.0 - s, q);
  const double dw = q * std::pow(s, q - 1) * std::pow(1.0 - s, q - 1) / ((p + r) * (p + r));
  return 0.5 * (hi - lo) * dw;
}

namespace {

// Inverse of graded_node.
double graded_inverse(double t, double lo, double hi, int q) {
  const double w = (t - lo) / (hi - lo);
  if (w <= 0.0) return -1.0;
  if (w >= 1.0) return 1.0;
  const double r = std::pow(w / (1.0 - w), 1.0 / q);
  return 2.0 * r / (1.0 + r) - 1.0;
}

// Barycentric interpolation on Chebyshev points of the second kind.
Complex barycentric(const std::vector<double>& u, const std::vector<Complex>& v, double x) {
  const std::size_t n = u.size();
  Complex num{};
  double den = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double diff = x - u[j];
    if (diff == 0.0) return v[j];
    double w = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j + 1 == n) w *= 0.5;
    num += (w / diff) * v[j];
    den += w / diff;
  }
  return num / den;
}

}  // namespace

Complex PhiProfile::operator()(double t) const {
  if (t < a_ || t > b_) throw DomainError("PhiProfile: t outside [a, b]");
  for (const auto& p : pieces_) {
    if (t >= p.lo && t <= p.hi) return barycentric(p.u, p.phi, graded_inverse(t, p.lo, p.hi, grading_));
  }
  return 0.0;
}

std::string PhiProfile::to_csv() const {
  std::ostringstream out;
  out << "t,re,im\n";
  double last = -kInf;
  for (const auto& p : pieces_) {
    // nodes are stored from hi to lo (u = cos(pi j/(n-1))); the grading can
    // round several end nodes onto the same t, and pieces share their ends
    for (std::size_t j = p.t.size(); j-- > 0;) {
      if (p.t[j] <= last) continue;
      last = p.t[j];
      out << format_double(p.t[j]) << ',' << format_double(p.phi[j].real()) << ','
          << format_double(p.phi[j].imag()) << '\n';
    }
  }
  return out.str();
}

PhiProfile phi_profile(const AnalyticFunction& f, double a, double b, double delta, int nodes) {
  if (nodes < 9) throw DomainError("phi_profile: at least 9 nodes per piece");
  const PhiTerms terms = phi_terms(f, a, b, delta);
  std::vector<double> ends{a};
  for (double p : interior_singularities(f, a, b)) ends.push_back(p);
  ends.push_back(b);

  std::vector<PhiProfile::Piece> pieces;
  for (std::size_t k = 0; k + 1 < ends.size(); ++k) {
    PhiProfile::Piece piece;
    piece.lo = ends[k];
    piece.hi = ends[k + 1];
    for (int j = 0; j < nodes; ++j) {
      const double u = std::cos(kPi * j / (nodes - 1));
      piece.u.push_back(u);
      double t = PhiProfile::graded_node(u, piece.lo, piece.hi, kGrading);
      if (j == 0) t = piece.hi;
      if (j == nodes - 1) t = piece.lo;
      piece.t.push_back(t);
    }
    piece.phi.resize(nodes);
    pieces.push_back(std::move(piece));
  }
  for (auto& piece : pieces) {
    parallel_for(piece.t.size(), [&](std::size_t j) { piece.phi[j] = phi_with(f, terms, piece.t[j]); });
  }
  PhiProfile profile(a, b, delta, std::move(pieces), kGrading);
  // Spot check the interpolant between nodes.
  std::vector<double> probes;
  for (const auto& p : profile.pieces())
    for (int j : {nodes / 8, nodes / 2, nodes - 1 - nodes / 8})
      probes.push_back(PhiProfile::graded_node(0.5 * (p.u[j] + p.u[j + 1]), p.lo, p.hi, kGrading));
  std::vector<double> gaps(probes.size());
  parallel_for(probes.size(), [&](std::size_t k) {
    gaps[k] = std::abs(profile(probes[k]) - phi_with(f, terms, probes[k]));
  });
  profile.interpolation_check = *std::max_element(gaps.begin(), gaps.end());
  return profile;
}

Complex pair_with_phi(const PhiProfile& profile, const C02Function& h) {
  if (profile.a() != h.a() || profile.b() != h.b())
    throw DomainError("pair_with_phi: profile and test function live on different intervals");
  Complex total{};
  for (const auto& p : profile.pieces()) {
    auto integrand = [&](double u) {
      const double t = PhiProfile::graded_node(u, p.lo, p.hi, kGrading);
      return h.H(t) * barycentric(p.u, p.phi, u) * PhiProfile::graded_node_derivative(u, p.lo, p.hi, kGrading);
    };
    total += quad::gauss_kronrod(integrand, -1.0, 1.0, tight()).value;
  }
  return total;
}

Complex boundary_limit_order_m(const AnalyticFunction& f, const TestFunction& test, double a, double b,
                               double delta, int m, Side side) {
  if (m < 0 || m > 4) throw DomainError("boundary_limit_order_m: m must lie in [0, 4]");
  if (test.max_derivative() < m + 1)
    throw DomainError("boundary_limit_order_m: test function lacks derivative of order " + std::to_string(m + 1));
  if (!(a < b) || !(delta > 0.0)) throw DomainError("boundary_limit_order_m: need a < b and delta > 0");
  const SimpleScanReport scan = simple_scan(f, a, b, 1e-6, m);
  if (!scan.bounded)
    throw NonSimpleBehavior("growth exponent exceeds m = " + std::to_string(m) + ": " + scan.diagnosis());

  const double sgn = side == Side::upper ? 1.0 : -1.0;
  const Complex is = I * sgn;
  const std::vector<double> cuts = interior_singularities(f, a, b);
  Complex total{};
  Complex power = 1.0;  // (+-i delta)^k
  for (int k = 0; k <= m; ++k) {
    const Complex integral =
        quad::integrate([&](double x) { return test.derivative(x, k) * f(Complex(x, sgn * delta)); }, a, b, cuts,
                        tight())
            .value;
    total += power / factorial(k) * integral;
    power *= is * delta;
  }
  const Complex remainder =
      quad::integrate(
          [&](double x) {
            const Complex d = test.derivative(x, m + 1);
            return d == Complex{} ? Complex{} : d * cutoff_moment(f, x, delta, m, side);
          },
          a, b, cuts, tight(), quad::Rule::tanh_sinh)
          .value;
  total += std::pow(is, m + 1) / factorial(m) * remainder;
  return total;
}

}  // namespace herglotz
