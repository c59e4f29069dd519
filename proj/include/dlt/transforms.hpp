#pragma once

#include "dlt/quadrature.hpp"
#include "dlt/signal_model.hpp"
#include "dlt/special_functions.hpp"

namespace dlt {

// Every transform has a closed form through E1 and an independent
// quadrature twin used to validate it.
enum class EvalMode { ClosedForm, QuadratureOracle };

// Value of the analytic continuation of LL(Z) on the cut, approached from
// the side recorded in `side` (FromAbove realizes the inversion formula).
struct BoundaryValue {
  double s;
  Complex value;
  BranchSide side;
};

// L(Z)(p) = int_0^inf e^{-px} Z(x) dx = sum gamma_k / (p - lambda_k).
// The oracle additionally requires Re p > -alpha_min.
Complex laplace(const ExponentialSum& model, Complex p,
                EvalMode mode = EvalMode::ClosedForm, double quad_tol = 1e-10);

// LL(Z)(p) = int_0^inf Z(x)/(p+x) dx, analytic on C \ (-inf, 0].
// Closed form: sum gamma_k e^{-p lambda_k} E1(-p lambda_k), continued across
// the rays where individual terms cross the E1 cut.
Complex double_laplace(const ExponentialSum& model, Complex p,
                       EvalMode mode = EvalMode::ClosedForm,
                       double quad_tol = 1e-10);

// F0(Z)(y) = int_0^inf e^{iyx} Z(x) dx = sum -gamma_k / (lambda_k + iy).
Complex fourier_half(const ExponentialSum& model, double y);
// Same formula at complex argument; used by the rotated-ray oracles.
Complex fourier_half(const ExponentialSum& model, Complex y);

// F0(F0(Z))(s). For s > 0 this is i * LL(Z)(s); for s < 0 it is the
// boundary value of the function regular in the upper half-plane.
Complex double_fourier(const ExponentialSum& model, double s,
                       EvalMode mode = EvalMode::ClosedForm,
                       double quad_tol = 1e-10);

// R(p) = int_0^inf e^{-px} F0(Z)(x) dx for p in the sector
// -pi/2 < arg p < phi0_sup, evaluated by rotated-ray quadrature. Regular in
// the sector and continuous onto the negative imaginary axis, where
// R(-is + 0) = i LL(Z)(s) carries the double-transform identity.
Complex mixed_transform_R(const ExponentialSum& model, Complex p,
                          double quad_tol = 1e-10);

// r_An(-s + i0), s > 0: the FromAbove boundary value on the cut.
BoundaryValue boundary_value(const ExponentialSum& model, double s);

// Z(s) recovered from the boundary value: -(1/pi) Im r_An(-s + i0).
double invert(const ExponentialSum& model, double s);

}  // namespace dlt
