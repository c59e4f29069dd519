#include "dlt/transforms.hpp"

#include <cmath>
#include <numbers>

namespace dlt {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kImag{0.0, 1.0};

bool on_negative_cut(Complex p) { return p.imag() == 0.0 && p.real() <= 0.0; }

// e^w E1(w) continued along the straight path w + x*d, x >= 0 (the image of
// the Stieltjes integration ray). When the path crosses (-inf, 0), the
// principal branch picks up -2*pi*i*sign(Im d)*e^w. On-cut w is resolved
// from above; both one-sided limits agree once the crossing term is added.
Complex continued_e1_scaled(Complex w, Complex d) {
  Complex base;
  bool on_cut = (w.imag() == 0.0 && w.real() < 0.0);
  if (on_cut) {
    const double x = -w.real();
    base = Complex(-ei_scaled(x), -kPi * std::exp(w.real()));
  } else {
    base = e1_scaled(w);
  }
  bool crossed = false;
  if (d.imag() != 0.0) {
    if (on_cut) {
      crossed = d.imag() < 0.0;
    } else if (w.imag() != 0.0) {
      const double xs = -w.imag() / d.imag();
      if (xs > 0.0 && w.real() + xs * d.real() < 0.0) crossed = true;
    }
  }
  if (crossed) {
    const double sign = d.imag() > 0.0 ? 1.0 : -1.0;
    base -= 2.0 * kPi * kImag * sign * std::exp(w);
  }
  return base;
}

// sum_k gamma_k e^{s lambda_k} E1(s lambda_k), continued from Im p > 0 onto
// the cut at p = -s. Upper poles keep the principal branch, real poles take
// the FromAbove boundary value, lower poles pick up the -2*pi*i monodromy.
Complex boundary_sum(const ExponentialSum& model, double s) {
  Complex sum = 0.0;
  for (const auto& t : model.terms()) {
    const Complex z = s * t.pole;
    Complex term;
    if (t.pole.imag() > 0.0) {
      term = e1_scaled(z);
    } else if (t.pole.imag() == 0.0) {
      const double x = -z.real();
      term = Complex(-ei_scaled(x), -kPi * std::exp(z.real()));
    } else {
      term = e1_scaled(z) - 2.0 * kPi * kImag * std::exp(z);
    }
    sum += t.residue * term;
  }
  return sum;
}

double ray_angle(const ExponentialSum& model) {
  return std::min(admissible_sector(model).phi0_sup / 2.0, kPi / 4.0);
}

}  // namespace

Complex laplace(const ExponentialSum& model, Complex p, EvalMode mode,
                double quad_tol) {
  for (const auto& t : model.terms())
    if (std::abs(p - t.pole) <= 1e-12 * (1.0 + std::abs(t.pole)))
      throw InvalidInputError("laplace: evaluation at pole");
  if (mode == EvalMode::ClosedForm) {
    Complex sum = 0.0;
    for (const auto& t : model.terms()) sum += t.residue / (p - t.pole);
    return sum;
  }
  if (model.empty()) return 0.0;
  const double decay = model.alpha_min() + p.real();
  if (!(decay > 0.0))
    throw InvalidInputError("laplace: quadrature oracle requires Re p > -alpha_min");
  const auto f = [&](double x) {
    Complex sum = 0.0;
    for (const auto& t : model.terms())
      sum += t.residue * std::exp((t.pole - p) * x);
    return sum;
  };
  return integrate_decaying(f, decay, quad_tol).value;
}

Complex double_laplace(const ExponentialSum& model, Complex p, EvalMode mode,
                       double quad_tol) {
  if (on_negative_cut(p))
    throw BranchError("double_laplace: p on the cut (-inf, 0]; use boundary_value");
  if (model.empty()) return 0.0;
  if (mode == EvalMode::ClosedForm) {
    Complex sum = 0.0;
    for (const auto& t : model.terms())
      sum += t.residue * continued_e1_scaled(-p * t.pole, -t.pole);
    return sum;
  }
  const auto f = [&](double x) { return eval_signal(model, x) / (p + x); };
  return integrate_decaying(f, model.alpha_min(), quad_tol).value;
}

Complex fourier_half(const ExponentialSum& model, double y) {
  return fourier_half(model, Complex(y, 0.0));
}

Complex fourier_half(const ExponentialSum& model, Complex y) {
  Complex sum = 0.0;
  for (const auto& t : model.terms()) sum -= t.residue / (t.pole + kImag * y);
  return sum;
}

Complex double_fourier(const ExponentialSum& model, double s, EvalMode mode,
                       double quad_tol) {
  if (s == 0.0) throw InvalidInputError("double_fourier: requires s != 0");
  if (model.empty()) return 0.0;
  if (mode == EvalMode::ClosedForm) {
    if (s > 0.0) {
      Complex sum = 0.0;
      for (const auto& t : model.terms())
        sum += t.residue * e1_scaled(-s * t.pole);
      return kImag * sum;
    }
    return kImag * boundary_sum(model, -s);
  }
  // Rotate toward decay: up for s > 0 (no poles in the upper half-plane),
  // down for s < 0 but staying inside the admissible sector.
  const double theta = (s > 0.0 ? 1.0 : -1.0) * ray_angle(model);
  const auto f = [&](Complex x) {
    return std::exp(kImag * s * x) * fourier_half(model, x);
  };
  const double decay = std::abs(s) * std::sin(std::abs(theta));
  return integrate_ray(f, theta, decay, quad_tol).value;
}

Complex mixed_transform_R(const ExponentialSum& model, Complex p,
                          double quad_tol) {
  if (p == 0.0) throw InvalidInputError("mixed_transform_R: p must be nonzero");
  const double phi0 = admissible_sector(model).phi0_sup;
  const double arg_p = std::arg(p);
  if (!(arg_p > -kPi / 2.0 && arg_p < phi0))
    throw InvalidInputError("mixed_transform_R: p outside the admissible sector");
  if (model.empty()) return 0.0;
  // Bisecting the argument keeps the e^{-px} kernel decaying along the ray
  // while the rotation stays strictly inside (-phi0, pi/2).
  const double theta = -arg_p / 2.0;
  const auto f = [&](Complex x) {
    return std::exp(-p * x) * fourier_half(model, x);
  };
  const double decay = std::abs(p) * std::cos(arg_p + theta);
  return integrate_ray(f, theta, decay, quad_tol).value;
}

BoundaryValue boundary_value(const ExponentialSum& model, double s) {
  if (!(s > 0.0)) throw InvalidInputError("boundary_value: requires s > 0");
  return {s, boundary_sum(model, s), BranchSide::FromAbove};
}

double invert(const ExponentialSum& model, double s) {
  return -boundary_value(model, s).value.imag() / kPi;
}

}  // namespace dlt
