#include "dlt/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dlt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

bool on_cut(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

// Ascending series E1(z) = -gamma - log z - sum_{n>=1} (-z)^n / (n * n!).
// Stable wherever the partial sums do not overshoot the result by more than
// ~e^6; the caller restricts it to |z| <= 1.5 and to a strip along the
// negative axis where |z| + Re z stays small (all terms near-positive there).
Complex e1_series(Complex z) {
  const Complex w = -z;
  Complex sum = 0.0;
  Complex pw = 1.0;  // w^n / n!
  const double r = std::abs(z);
  for (int n = 1; n < 2000; ++n) {
    pw *= w / static_cast<double>(n);
    const Complex term = pw / static_cast<double>(n);
    sum += term;
    if (std::abs(term) <= 0.1 * kEps * std::abs(sum) && n > r) break;
  }
  return -kEulerGamma - std::log(z) - sum;
}

// Modified Lentz evaluation of the continued fraction
//   e^z E1(z) = 1 / (z+1 - 1/(z+3 - 4/(z+5 - 9/(...)))),
// which yields the scaled form directly. Converges off the cut; slow only
// close to the negative axis, which the region split sends to the series.
Complex e1_cf_scaled(Complex z) {
  const double tiny = 1e-300;
  Complex f = z + 1.0;
  if (f == 0.0) f = tiny;
  Complex c = f;
  Complex d = 0.0;
  double last_delta = std::numeric_limits<double>::max();
  for (int k = 1; k < 1000; ++k) {
    const double a = -static_cast<double>(k) * static_cast<double>(k);
    const Complex b = z + static_cast<double>(2 * k + 1);
    d = b + a * d;
    if (d == 0.0) d = tiny;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const Complex delta = c * d;
    f *= delta;
    last_delta = std::abs(delta - 1.0);
    if (last_delta < kEps) return 1.0 / f;
  }
  throw ConvergenceError("e1: continued fraction did not converge", last_delta);
}

// Truncated asymptotic expansion e^z E1(z) ~ (1/z) sum_k (-1)^k k! / z^k,
// used only for very large |z| where it reaches machine precision.
Complex e1_asymptotic_scaled(Complex z) {
  Complex sum = 1.0;
  Complex term = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= -static_cast<double>(k) / z;
    const double mag = std::abs(term);
    if (mag > prev) break;  // past the optimal truncation point
    sum += term;
    prev = mag;
    if (mag <= kEps * std::abs(sum)) break;
  }
  return sum / z;
}

// True when z sits in the strip along the negative real axis where the
// ascending series keeps its accuracy (bounded cancellation) and the
// continued fraction stalls.
bool in_series_strip(Complex z) {
  return z.real() < 0.0 && std::abs(z) + z.real() <= 6.0;
}

double ei_series(double x) {
  double sum = 0.0;
  double px = 1.0;  // x^n / n!
  for (int n = 1; n < 500; ++n) {
    px *= x / n;
    const double term = px / n;
    sum += term;
    if (term <= 0.1 * kEps * sum && n > x) break;
  }
  return kEulerGamma + std::log(x) + sum;
}

double ei_asymptotic_scaled(double x) {
  double sum = 1.0;
  double term = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= k / x;
    if (term > prev) break;  // past the optimal truncation point
    sum += term;
    prev = term;
    if (term <= kEps * sum) break;
  }
  return sum / x;
}

}  // namespace

Complex e1(Complex z) {
  if (on_cut(z)) {
    if (z == 0.0)
      throw BranchError("e1: singular at z = 0");
    throw BranchError("e1: argument on the branch cut (-inf, 0]; use e1_boundary");
  }
  if (std::abs(z) <= 1.5 || in_series_strip(z)) return e1_series(z);
  return std::exp(-z) * e1_cf_scaled(z);
}

Complex e1_scaled(Complex z) {
  if (on_cut(z)) {
    if (z == 0.0)
      throw BranchError("e1_scaled: singular at z = 0");
    throw BranchError(
        "e1_scaled: argument on the branch cut (-inf, 0]; use e1_boundary");
  }
  if (std::abs(z) <= 1.5) return std::exp(z) * e1_series(z);
  if (in_series_strip(z)) {
    // exp(z) underflows and E1(z) overflows together near Re z ~ -700;
    // switch to the pure 1/z expansion before that happens.
    if (z.real() < -600.0) return e1_asymptotic_scaled(z);
    return std::exp(z) * e1_series(z);
  }
  return e1_cf_scaled(z);
}

double ei(double x) {
  if (!(x > 0.0)) throw InvalidInputError("ei: requires x > 0");
  if (x <= 40.0) return ei_series(x);
  return std::exp(x) * ei_asymptotic_scaled(x);
}

double ei_scaled(double x) {
  if (!(x > 0.0)) throw InvalidInputError("ei_scaled: requires x > 0");
  if (x <= 40.0) return std::exp(-x) * ei_series(x);
  return ei_asymptotic_scaled(x);
}

Complex e1_boundary(double x, BranchSide side) {
  if (!(x > 0.0)) throw InvalidInputError("e1_boundary: requires x > 0");
  const double im = (side == BranchSide::FromAbove) ? -kPi : kPi;
  return {-ei(x), im};
}

}  // namespace dlt
