#pragma once

#include <complex>

#include "dlt/errors.hpp"

namespace dlt {

using Complex = std::complex<double>;

// Which side of the cut (-inf, 0] a boundary value is taken from.
enum class BranchSide { FromAbove, FromBelow };

// Principal-branch exponential integral E1(z) = int_z^inf e^{-t}/t dt,
// analytic on C \ (-inf, 0]. Throws BranchError for z on the cut.
Complex e1(Complex z);

// e^z * E1(z), formed without evaluating e^z and E1(z) separately when the
// exponentials would over/underflow. Tends to 1/z as |z| -> inf.
Complex e1_scaled(Complex z);

// Real exponential integral Ei(x) = -PV int_{-x}^inf e^{-t}/t dt, x > 0.
double ei(double x);

// e^{-x} * Ei(x), overflow-safe for large x.
double ei_scaled(double x);

// Boundary value of E1 on the cut: E1(-x +- i0) = -Ei(x) -+ i*pi, x > 0.
Complex e1_boundary(double x, BranchSide side);

}  // namespace dlt
