#include "herglotz/support.hpp"

#include <algorithm>
#include <cmath>

namespace herglotz {
namespace {

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<double> BoundarySupport::points_in(double lo, double hi) const {
  std::vector<double> out;
  for (double p : points)
    if (p >= lo && p <= hi) out.push_back(p);
  if (arithmetic && std::isfinite(lo) && std::isfinite(hi)) {
    const auto [offset, period] = *arithmetic;
    const long k0 = static_cast<long>(std::ceil((lo - offset) / period));
    const long k1 = static_cast<long>(std::floor((hi - offset) / period));
    for (long k = k0; k <= k1; ++k) out.push_back(offset + k * period);
  }
  if (geometric && hi > 0.0 && std::isfinite(hi)) {
    const auto [base, ratio] = *geometric;
    const double from = std::max(lo, 1e-12);  // the lattice accumulates at 0
    const long k0 = static_cast<long>(std::ceil(std::log(from / base) / std::log(ratio)));
    const long k1 = static_cast<long>(std::floor(std::log(hi / base) / std::log(ratio)));
    for (long k = k0; k <= k1; ++k) {
      const double p = base * std::pow(ratio, static_cast<double>(k));
      if (p >= lo && p <= hi) out.push_back(p);
    }
  }
  sort_unique(out);
  return out;
}

std::vector<double> BoundarySupport::interval_ends_in(double lo, double hi) const {
  std::vector<double> out;
  for (const auto& iv : intervals) {
    for (double e : {iv.lo, iv.hi})
      if (std::isfinite(e) && e >= lo && e <= hi) out.push_back(e);
  }
  sort_unique(out);
  return out;
}

std::vector<double> BoundarySupport::breakpoints_in(double lo, double hi) const {
  std::vector<double> out = points_in(lo, hi);
  const std::vector<double> ends = interval_ends_in(lo, hi);
  out.insert(out.end(), ends.begin(), ends.end());
  sort_unique(out);
  return out;
}

bool BoundarySupport::meets(double lo, double hi) const {
  if (!points_in(lo, hi).empty()) return true;
  for (const auto& iv : intervals)
    if (iv.lo <= hi && iv.hi >= lo) return true;
  if (infinity && (std::isinf(lo) || std::isinf(hi))) return true;
  return false;
}

double BoundarySupport::distance(double x) const {
  double best = kInf;
  for (const auto& iv : intervals) {
    if (x >= iv.lo && x <= iv.hi) return 0.0;
    best = std::min(best, std::min(std::abs(x - iv.lo), std::abs(x - iv.hi)));
  }
  for (double p : points) best = std::min(best, std::abs(x - p));
  if (arithmetic) {
    const auto [offset, period] = *arithmetic;
    const double k = std::round((x - offset) / period);
    best = std::min(best, std::abs(x - (offset + k * period)));
  }
  if (geometric && x > 0.0) {
    const auto [base, ratio] = *geometric;
    const double k = std::floor(std::log(x / base) / std::log(ratio));
    for (double j : {k, k + 1.0}) best = std::min(best, std::abs(x - base * std::pow(ratio, j)));
  } else if (geometric) {
    best = std::min(best, std::abs(x));  // the lattice accumulates at 0
  }
  return best;
}

double BoundarySupport::isolation(double x) const {
  const double eps = 1e-9 * std::max(1.0, std::abs(x));
  double best = kInf;
  for (const auto& iv : intervals) {
    if (x >= iv.lo && x <= iv.hi) return 0.0;
    best = std::min(best, std::min(std::abs(x - iv.lo), std::abs(x - iv.hi)));
  }
  auto consider = [&](double p) {
    const double d = std::abs(x - p);
    if (d > eps) best = std::min(best, d);
  };
  for (double p : points) consider(p);
  if (arithmetic) {
    const auto [offset, period] = *arithmetic;
    const double k = std::round((x - offset) / period);
    for (double j : {k - 1.0, k, k + 1.0}) consider(offset + j * period);
  }
  if (geometric) {
    const auto [base, ratio] = *geometric;
    if (x > 0.0) {
      const double k = std::round(std::log(x / base) / std::log(ratio));
      for (double j : {k - 1.0, k, k + 1.0}) consider(base * std::pow(ratio, j));
    }
    consider(0.0);
  }
  return best;
}

}  // namespace herglotz
