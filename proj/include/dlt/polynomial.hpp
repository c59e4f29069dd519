#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "dlt/errors.hpp"

namespace dlt {

using Complex = std::complex<double>;

// Poles closer together than this (relative to the largest pole magnitude)
// are treated as numerically coincident.
constexpr double kPoleSeparationRel = 1e-6;

// The configuration is mathematically legal but numerically unreliable
// (e.g. nearly coincident poles make residues meaningless).
class IllConditionedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense polynomial over C, coefficients in ascending degree order. The zero
// polynomial is the empty list; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  // Monic polynomial with the given roots.
  static Polynomial from_roots(std::span<const Complex> roots);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool has_real_coeffs(double rel_tol = 0.0) const;

  Complex eval(Complex z) const;
  Polynomial derivative() const;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

struct PoleResidue {
  Complex pole;
  Complex residue;
};

struct RootOptions {
  double tol = 1e-12;  // relative residual target
  int max_iterations = 200;
};

// All roots (with multiplicity) via Aberth-Ehrlich simultaneous iteration
// followed by Newton polishing. Every returned root r satisfies
// |p(r)| <= tol * maxcoeff * max(1,|r|)^degree, else ConvergenceError.
std::vector<Complex> find_roots(const Polynomial& p, const RootOptions& opts = {});

// Residues of q/p at the given simple roots of p: gamma_k = q(l_k) / p'(l_k).
// Requires deg q < deg p and pairwise root separation above the threshold.
std::vector<PoleResidue> compute_residues(const Polynomial& q,
                                          const Polynomial& p,
                                          const std::vector<Complex>& roots);

}  // namespace dlt
