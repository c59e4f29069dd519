#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dlt/quadrature.hpp"
#include "dlt/special_functions.hpp"

using dlt::BranchSide;
using dlt::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

struct E1Ref {
  Complex z;
  Complex e1;
  Complex e1_scaled;
};

// Reference values computed with mpmath at 40 significant digits.
const E1Ref kE1Table[] = {
#include "e1_reference.inc"
};

double rel_gap(Complex got, Complex want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

// Deterministic uniform stream for property checks.
struct Rng {
  std::uint64_t state;
  double next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  double range(double lo, double hi) { return lo + (hi - lo) * next(); }
};

}  // namespace

TEST_CASE("e1 matches multiprecision references across all regions") {
  for (const E1Ref& ref : kE1Table) {
    CAPTURE(ref.z.real());
    CAPTURE(ref.z.imag());
    CHECK(rel_gap(dlt::e1(ref.z), ref.e1) < 1e-13);
    CHECK(rel_gap(dlt::e1_scaled(ref.z), ref.e1_scaled) < 1e-13);
  }
}

TEST_CASE("e1 at classic real points") {
  // E1(1) = 0.21938393439552027..., e*E1(1) = 0.59634736232319407...
  CHECK(dlt::e1(Complex(1.0, 0.0)).real() ==
        doctest::Approx(0.21938393439552027).epsilon(1e-14));
  CHECK(dlt::e1(Complex(1.0, 0.0)).imag() == 0.0);
  CHECK(dlt::e1_scaled(Complex(1.0, 0.0)).real() ==
        doctest::Approx(0.59634736232319407).epsilon(1e-14));
}

TEST_CASE("e1 quadrature oracle along the shifted ray") {
  // E1(z) = int_0^inf e^{-(z+u)}/(z+u) du; compare in scaled form so the
  // comparison stays relative for large Re z.
  Rng rng{42};
  for (int k = 0; k < 20; ++k) {
    const double r = std::pow(10.0, rng.range(-1.0, 2.0));
    const double th = rng.range(-1.3, 1.3);
    const Complex z = std::polar(r, th);
    const auto f = [&](double u) { return std::exp(-u) / (z + u); };
    const Complex oracle = dlt::integrate_decaying(f, 1.0, 1e-13).value;
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(std::abs(dlt::e1_scaled(z) - oracle) <= 1e-11 * std::abs(oracle));
  }
}

TEST_CASE("e1 limit toward zero recovers -euler_gamma") {
  // E1(z) + ln z = -egamma + z - z^2/4 + ...; at z = 1e-8 the linear term
  // still shows, so compare against the two-term series value.
  const Complex z(1e-8, 0.0);
  const Complex v = dlt::e1(z) + std::log(z);
  CHECK(std::abs(v.real() - (-std::numbers::egamma + 1e-8)) < 1e-15);
  CHECK(std::abs(v.real() - (-std::numbers::egamma)) < 1.1e-8);
}

TEST_CASE("e1 rejects the cut and the origin") {
  CHECK_THROWS_AS(dlt::e1(Complex(-1.0, 0.0)), dlt::BranchError);
  CHECK_THROWS_AS(dlt::e1(Complex(0.0, 0.0)), dlt::BranchError);
  CHECK_THROWS_AS(dlt::e1_scaled(Complex(-2.5, 0.0)), dlt::BranchError);
  CHECK_NOTHROW(dlt::e1(Complex(1e-12, 0.0)));  // positive axis is fine
}

TEST_CASE("Schwarz reflection holds to machine precision") {
  Rng rng{7};
  for (int k = 0; k < 40; ++k) {
    const double re = rng.range(-30.0, 30.0);
    double im = rng.range(-20.0, 20.0);
    if (im == 0.0) im = 0.5;
    const Complex z(re, im);
    if (std::abs(z) < 1e-3) continue;
    const Complex a = dlt::e1(z);
    const Complex b = dlt::e1(std::conj(z));
    CHECK(a.real() == b.real());
    CHECK(a.imag() == -b.imag());
    const Complex as = dlt::e1_scaled(z);
    const Complex bs = dlt::e1_scaled(std::conj(z));
    CHECK(as.real() == bs.real());
    CHECK(as.imag() == -bs.imag());
  }
}

TEST_CASE("derivative identity E1'(z) = -e^{-z}/z") {
  Rng rng{99};
  for (int k = 0; k < 20; ++k) {
    const double r = std::pow(10.0, rng.range(-0.5, 1.3));
    const double th = rng.range(-2.6, 2.6);
    const Complex z = std::polar(r, th);
    if (std::abs(z.imag()) < 1e-3 && z.real() < 0.0) continue;
    const double h = 1e-5 * std::abs(z);
    const Complex num =
        (dlt::e1(z + Complex(h, 0)) - dlt::e1(z - Complex(h, 0))) / (2.0 * h);
    const Complex want = -std::exp(-z) / z;
    CHECK(std::abs(num - want) <= 1e-6 * std::abs(want));
  }
}

TEST_CASE("e1_scaled approaches 1/z at large arguments") {
  const Complex v = dlt::e1_scaled(Complex(1e6, 0.0));
  CHECK(std::abs(v * 1e6 - 1.0) < 1e-5);
}

TEST_CASE("ei matches principal-value quadrature oracle") {
  // Ei(x) = -e^x PV int_0^inf e^{-u}/(u - x) du
  for (double x : {1.0, 2.0}) {
    const auto g = [](double u) { return Complex(std::exp(-u), 0.0); };
    const double pv = dlt::integrate_pv(g, x, 1.0, 1e-13).value.real();
    const double oracle = -std::exp(x) * pv;
    CHECK(std::abs(dlt::ei(x) - oracle) <= 1e-12 * std::abs(oracle));
  }
  CHECK(dlt::ei(1.0) == doctest::Approx(1.8951178163559368).epsilon(1e-14));
  CHECK(dlt::ei(2.0) == doctest::Approx(4.9542343560018902).epsilon(1e-14));
}

TEST_CASE("ei series limit and large-x switch") {
  const double x = 1e-8;
  CHECK(std::abs(dlt::ei(x) - std::log(x) - std::numbers::egamma) < 1e-7);
  // Both branches around the crossover match multiprecision references.
  CHECK(dlt::ei(39.5) == doctest::Approx(3710918879133970.63).epsilon(1e-13));
  CHECK(dlt::ei(40.5) == doctest::Approx(9831586535606509.88).epsilon(1e-13));
  CHECK(dlt::ei(100.0) == doctest::Approx(2.7155527448538798e41).epsilon(1e-13));
  CHECK_THROWS_AS(dlt::ei(0.0), dlt::InvalidInputError);
  CHECK_THROWS_AS(dlt::ei(-1.0), dlt::InvalidInputError);
}

TEST_CASE("ei_scaled is consistent with ei") {
  for (double x : {0.5, 5.0, 39.0, 41.0, 300.0}) {
    CHECK(dlt::ei_scaled(x) ==
          doctest::Approx(std::exp(-x) * dlt::ei(x)).epsilon(1e-12));
  }
}

TEST_CASE("boundary values on the cut") {
  for (double x : {0.1, 1.0, 10.0, 100.0}) {
    const Complex above = dlt::e1_boundary(x, BranchSide::FromAbove);
    const Complex below = dlt::e1_boundary(x, BranchSide::FromBelow);
    CHECK(above.imag() == -kPi);
    CHECK(below.imag() == kPi);
    CHECK(above.real() == below.real());
    const Complex jump = above - below;
    CHECK(jump.real() == 0.0);
    CHECK(std::abs(jump.imag() + 2.0 * kPi) <=
          4.0 * std::numeric_limits<double>::epsilon() * 2.0 * kPi);
  }
  const Complex bv = dlt::e1_boundary(1.0, BranchSide::FromAbove);
  CHECK(bv.real() == doctest::Approx(-1.8951178163559368).epsilon(1e-14));
  CHECK(bv.imag() == doctest::Approx(-3.1415926535897932).epsilon(1e-15));
  CHECK_THROWS_AS(dlt::e1_boundary(0.0, BranchSide::FromAbove),
                  dlt::InvalidInputError);
}

TEST_CASE("continuity onto the cut from above") {
  for (double x : {0.5, 1.0, 3.0}) {
    const Complex bv = dlt::e1_boundary(x, BranchSide::FromAbove);
    const double err6 = std::abs(dlt::e1(Complex(-x, 1e-6)) - bv);
    const double err8 = std::abs(dlt::e1(Complex(-x, 1e-8)) - bv);
    CHECK(err8 < err6);
    CHECK(err8 <= 1e-5);
  }
}
