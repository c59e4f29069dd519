#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

#include "dlt/errors.hpp"

namespace dlt {

using Complex = std::complex<double>;
using RealIntegrand = std::function<Complex(double)>;
using ComplexIntegrand = std::function<Complex(Complex)>;

struct QuadResult {
  Complex value{};
  double error_estimate = 0.0;
  int panels_used = 0;
};

// Adaptive refinement ran out of panels before reaching the tolerance.
class ToleranceNotMetError : public std::runtime_error {
 public:
  ToleranceNotMetError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

// Adaptive Gauss-Kronrod (15/7 pair) on a finite interval.
QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              double tol = 1e-10);

// int_0^inf f(x) dx for f with |f(x)| <= C e^{-decay_rate x} eventually.
// The truncation point is chosen so the tail bound stays below tol/10.
QuadResult integrate_decaying(const RealIntegrand& f, double decay_rate,
                              double tol = 1e-10);

// PV int_0^inf g(x)/(x - s) dx, s > 0. The window [s-delta, s+delta] is
// folded into int_0^delta (g(s+u) - g(s-u))/u du, which is regular.
// delta defaults to min(s/2, 1); an override must satisfy 0 < delta <= s/2.
QuadResult integrate_pv(const RealIntegrand& g, double s, double decay_rate,
                        double tol = 1e-10, double delta = 0.0);

// int_0^inf f(x) dx evaluated along the rotated ray x = t e^{i theta};
// valid when f is analytic in the swept sector and decays along the ray.
QuadResult integrate_ray(const ComplexIntegrand& f, double theta,
                         double decay_rate, double tol = 1e-10);

}  // namespace dlt
