#include "herglotz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

namespace herglotz::quad {
namespace {

// Kronrod abscissae and weights (15 points) with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

double tolerance(const Options& opts, const Complex& value) {
  return std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
}

// Shared driver for the double-exponential rules. `node(t, &x, &w)` maps the
// parameter t to an abscissa and a weight; returns false when the node must be
// skipped (underflow or collision with an endpoint).
template <class NodeFn>
Result double_exponential(const Integrand& f, NodeFn node, double t_max, const Options& opts) {
  Result out;
  auto term = [&](double t) -> Complex {
    double x = 0.0, w = 0.0;
    if (!node(t, x, w)) return {};
    ++out.evaluations;
    return w * f(x);
  };
  double h = 1.0;
  Complex sum = term(0.0);
  for (int j = 1; j * h <= t_max; ++j) sum += term(j * h) + term(-j * h);
  Complex estimate = h * sum;
  out.converged = false;
  for (int level = 1; level <= opts.max_level; ++level) {
    h *= 0.5;
    Complex fresh{};
    for (int j = 1; j * h <= t_max; j += 2) fresh += term(j * h) + term(-j * h);
    sum += fresh;
    const Complex next = h * sum;
    out.error = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && out.error <= tolerance(opts, estimate)) {
      out.converged = true;
      break;
    }
  }
  out.value = estimate;
  return out;
}

}  // namespace

Result gauss_kronrod(const Integrand& f, double a, double b, const Options& opts) {
  Result out;
  if (a == b) return out;
  if (a > b) {
    out = gauss_kronrod(f, b, a, opts);
    out.value = -out.value;
    return out;
  }
  std::priority_queue<Panel> heap;
  std::vector<Panel> settled;  // panels too narrow to split further
  Panel first = gk15(f, a, b);
  out.evaluations = 15;
  Complex total = first.value;
  double total_error = first.error;
  heap.push(first);
  int panels = 1;
  while (!heap.empty() && total_error > tolerance(opts, total) && panels < opts.max_intervals) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) <= 64 * std::numeric_limits<double>::epsilon() *
                                   std::max(std::abs(worst.a), std::abs(worst.b))) {
      settled.push_back(worst);
      continue;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // Re-sum in a fixed order so the result does not carry the running-update drift.
  std::vector<Panel> all = std::move(settled);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  out.value = {};
  out.error = 0.0;
  for (const Panel& p : all) {
    out.value += p.value;
    out.error += p.error;
  }
  out.converged = out.error <= tolerance(opts, out.value);
  return out;
}

Result tanh_sinh(const Integrand& f, double a, double b, const Options& opts) {
  if (a == b) return {};
  if (a > b) {
    Result r = tanh_sinh(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  const double half = 0.5 * (b - a);
  auto node = [&](double t, double& x, double& w) {
    const double u = 0.5 * kPi * std::sinh(t);
    const double e = std::exp(-2.0 * std::abs(u));
    // distance from the nearer endpoint, in units of the half-width
    const double d = 2.0 * e / (1.0 + e);
    // nodes closer than this to an endpoint contribute nothing representable
    if (half * d < 1e-200) return false;
    x = (t < 0) ? a + half * d : b - half * d;
    if (x <= a || x >= b) return false;
    const double sech = 2.0 * std::exp(-std::abs(u)) / (1.0 + e);
    w = half * 0.5 * kPi * std::cosh(t) * sech * sech;
    return w > 0.0;
  };
  return double_exponential(f, node, 6.5, opts);
}

Result exp_sinh(const Integrand& f, double a, int direction, const Options& opts) {
  const double scale = std::max(1.0, std::abs(a));
  const double sign = direction >= 0 ? 1.0 : -1.0;
  auto node = [&](double t, double& x, double& w) {
    const double u = 0.5 * kPi * std::sinh(t);
    if (u > 700.0 || u < -700.0) return false;
    const double g = scale * std::exp(u);
    if (g < 1e-200) return false;
    x = a + sign * g;
    if (x == a || !std::isfinite(x)) return false;
    w = 0.5 * kPi * std::cosh(t) * g;
    return true;
  };
  Result r = double_exponential(f, node, 6.7, opts);
  return r;
}

Result integrate(const Integrand& f, double lo, double hi, std::vector<double> breakpoints,
                 const Options& opts, Rule rule) {
  if (lo == hi) return {};
  if (lo > hi) {
    Result r = integrate(f, hi, lo, std::move(breakpoints), opts, rule);
    r.value = -r.value;
    return r;
  }
  std::vector<double> cuts;
  for (double p : breakpoints)
    if (std::isfinite(p) && p > lo && p < hi) cuts.push_back(p);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Infinite ends need a finite anchor to start the exp-sinh tail.
  if (std::isinf(lo) && std::isinf(hi) && cuts.empty()) cuts.push_back(0.0);

  std::vector<double> nodes;
  nodes.push_back(lo);
  nodes.insert(nodes.end(), cuts.begin(), cuts.end());
  nodes.push_back(hi);

  // Split the tolerance budget evenly across segments.
  Options seg_opts = opts;
  const std::size_t segments = nodes.size() - 1;
  seg_opts.abs_tol = opts.abs_tol / static_cast<double>(segments);

  Result out;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double a = nodes[i], b = nodes[i + 1];
    if (std::isinf(a)) {
      out += exp_sinh(f, b, -1, seg_opts);
    } else if (std::isinf(b)) {
      out += exp_sinh(f, a, +1, seg_opts);
    } else {
      const bool outer = (i == 0) || (i + 2 == nodes.size());
      const bool use_ts = rule == Rule::tanh_sinh || (rule == Rule::mixed && outer);
      out += use_ts ? tanh_sinh(f, a, b, seg_opts) : gauss_kronrod(f, a, b, seg_opts);
    }
  }
  return out;
}

std::vector<double> graded_breakpoints(double x0, double d, double lo, double hi, double reach) {
  std::vector<double> pts;
  if (!(d > 0.0) || !std::isfinite(x0)) return pts;
  if (x0 > lo && x0 < hi) pts.push_back(x0);
  for (double off = d; off <= reach; off *= 2.0) {
    if (x0 - off > lo && x0 - off < hi) pts.push_back(x0 - off);
    if (x0 + off > lo && x0 + off < hi) pts.push_back(x0 + off);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

Complex periodic_trapezoid(const std::function<Complex(double)>& f, int n) {
  Complex sum{};
  const double h = 2.0 * kPi / n;
  for (int k = 0; k < n; ++k) sum += f(-kPi + k * h);
  return sum * h;
}

PeriodicResult periodic_integral(const std::function<Complex(double)>& f, double tol, int n_min,
                                 int n_max) {
  PeriodicResult out;
  int n = n_min;
  Complex prev = periodic_trapezoid(f, n);
  while (n < n_max) {
    // Reuse the previous sum: new nodes sit at the midpoints.
    const double h = 2.0 * kPi / n;
    Complex mid{};
    for (int k = 0; k < n; ++k) mid += f(-kPi + (k + 0.5) * h);
    const Complex next = 0.5 * (prev + mid * h);
    n *= 2;
    out.error = std::abs(next - prev);
    prev = next;
    if (out.error <= tol * std::max(1.0, std::abs(next))) {
      out.converged = true;
      break;
    }
  }
  out.value = prev;
  out.nodes = n;
  return out;
}

}  // namespace herglotz::quad
