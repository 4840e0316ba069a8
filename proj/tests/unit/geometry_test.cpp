#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "herglotz/catalog.hpp"
#include "herglotz/function.hpp"
#include "herglotz/geometry.hpp"

using namespace herglotz;

namespace {

const Complex I(0.0, 1.0);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("mobius_apply on the sphere") {
    CHECK(mobius_apply(MobiusMatrix::identity(), ComplexPoint(2, 3)) == ComplexPoint(2, 3));
    CHECK(rel(mobius_apply(MobiusMatrix::inversion(), ComplexPoint(I)).value(), I) < 1e-15);
    CHECK(mobius_apply(MobiusMatrix(1, 1, 0, 1), ComplexPoint::infinity()).is_infinity());
    // infinity -> a/c, and the pole -d/c -> infinity
    const MobiusMatrix A(2, 1, 1, 3);
    CHECK(mobius_apply(A, ComplexPoint::infinity()).value() == Complex(2.0));
    CHECK(mobius_apply(A, ComplexPoint(-3, 0)).is_infinity());
  }

  TEST_CASE("singular matrices are rejected") {
    CHECK_THROWS_AS(MobiusMatrix(1, 2, 2, 4), DomainError);
    CHECK_THROWS_AS(MobiusMatrix(0, 0, 0, 0), DomainError);
  }

  TEST_CASE("mobius composition matches the matrix product") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
      const MobiusMatrix A(u(rng), u(rng), u(rng), u(rng)), B(u(rng), u(rng), u(rng), u(rng));
      const ComplexPoint z(u(rng), u(rng));
      const ComplexPoint lhs = mobius_apply(A, mobius_apply(B, z));
      const ComplexPoint rhs = mobius_apply(A * B, z);
      if (lhs.is_infinity() || rhs.is_infinity()) continue;
      worst = std::max(worst, rel(lhs.value(), rhs.value()));
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("mobius_image_interval splits at the pole") {
    const auto one = mobius_image_interval(MobiusMatrix::translation(1), -2, 3);
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == doctest::Approx(-1));
    CHECK(one[0].second == doctest::Approx(4));
    auto two = mobius_image_interval(MobiusMatrix::inversion(), -1, 2);
    REQUIRE(two.size() == 2);
    std::sort(two.begin(), two.end());
    // -1/t on [-1, 0) covers [1, inf), on (0, 2] covers (-inf, -1/2]
    CHECK(two[0].second == doctest::Approx(-0.5));
    CHECK(std::isinf(two[0].first));
    CHECK(two[1].first == doctest::Approx(1));
  }

  TEST_CASE("cayley maps") {
    CHECK(std::abs(cayley_to_disc(ComplexPoint(I)).value()) < 1e-16);
    CHECK(rel(cayley_to_disc(ComplexPoint(0, 0)).value(), 1.0) < 1e-16);
    CHECK(rel(cayley_to_disc(ComplexPoint::infinity()).value(), -1.0) < 1e-16);
    CHECK(rel(cayley_to_halfplane(ComplexPoint(0, 0)).value(), I) < 1e-16);
    CHECK(cayley_to_halfplane(ComplexPoint(-1, 0)).is_infinity());
    const Complex w(2, 5);
    CHECK(rel(cayley_to_halfplane(cayley_to_disc(w)).value(), w) <= 1e-14);
  }

  TEST_CASE("cayley maps are mutually inverse and match the half-planes") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      // radius spread over many scales, both half-planes
      const double scale = std::pow(10.0, 3.0 * u(rng));
      const Complex w = scale * Complex(u(rng), u(rng));
      if (w.imag() == 0.0) continue;
      const ComplexPoint z = cayley_to_disc(w);
      worst = std::max(worst, rel(cayley_to_halfplane(z).value(), w));
      CHECK((w.imag() > 0) == (std::abs(z.value()) < 1.0));
      const Complex zd(0.99 * u(rng), 0.99 * u(rng));
      CHECK((cayley_to_halfplane(zd).im() > 0) == (std::abs(zd) < 1.0));
    }
    CHECK(worst <= 1e-13);
  }

  TEST_CASE("disc rotation matrix") {
    const MobiusMatrix r0 = disc_rotation_matrix(0.0);
    CHECK(r0.a() == 1.0);
    CHECK(r0.b() == 0.0);
    CHECK(r0.c() == 0.0);
    CHECK(r0.d() == 1.0);
    const MobiusMatrix rpi = disc_rotation_matrix(kPi);
    CHECK(std::abs(rpi.a()) < 1e-15);
    CHECK(rpi.b() == doctest::Approx(1.0));
    CHECK(rpi.c() == doctest::Approx(-1.0));
    const Complex w(0.4, 2.0);
    CHECK(rel(mobius_apply(rpi, w).value(), -1.0 / w) < 1e-15);

    // group law up to sign, and rotation of the disc coordinate by +theta
    const double t1 = 0.7, t2 = 1.9;
    const MobiusMatrix p = disc_rotation_matrix(t1) * disc_rotation_matrix(t2);
    const MobiusMatrix s = disc_rotation_matrix(t1 + t2);
    CHECK(std::abs(std::abs(p.a() * s.a() + p.b() * s.b()) - 1.0) < 1e-14);
    CHECK(rel(mobius_apply(p, w).value(), mobius_apply(s, w).value()) < 1e-14);
    const Complex z0 = cayley_to_disc(w).value();
    const Complex z1 = cayley_to_disc(mobius_apply(disc_rotation_matrix(t1), w)).value();
    CHECK(rel(z1, std::polar(1.0, t1) * z0) < 1e-14);
  }

  TEST_CASE("star reflection") {
    const AnalyticFunction id([](Complex z) { return z; }, Picture::half_plane);
    const AnalyticFunction ci([](Complex) { return Complex(0, 1); }, Picture::half_plane);
    const AnalyticFunction tan_f = catalog_build(CatalogSpec::of(CatalogKind::tan));
    const AnalyticFunction odd([](Complex z) { return std::exp(Complex(0.3, 1.1) * z) + Complex(0, 2) * z; },
                               Picture::half_plane);
    const Complex w(0.8, -1.3);
    CHECK(rel(star_reflect(id)(w), w) < 1e-15);
    CHECK(rel(star_reflect(ci)(w), Complex(0, -1)) < 1e-15);
    double worst = 0.0;
    for (double x = -2.0; x <= 2.0; x += 0.25) {
      for (double y : {-1.5, -0.1, 0.2, 3.0}) {
        const Complex z(x, y);
        worst = std::max(worst, rel(star_reflect(tan_f)(z), tan_f(z)));
        worst = std::max(worst, rel(star_reflect(star_reflect(odd))(z), odd(z)));
      }
    }
    CHECK(worst <= 1e-14);
  }

  TEST_CASE("disc star is the reflection across the circle") {
    const AnalyticFunction phi([](Complex z) { return (1.0 + z) / (1.0 - z) + Complex(0, 0.5) * z; }, Picture::disc);
    const Complex z(0.3, -0.4);
    CHECK(rel(star_reflect(phi)(z), -std::conj(phi(1.0 / std::conj(z)))) < 1e-15);
    CHECK(rel(star_reflect(star_reflect(phi))(z), phi(z)) < 1e-15);
  }
}
