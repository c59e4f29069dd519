#pragma once

#include <string>
#include <vector>

#include "dlt/polynomial.hpp"

namespace dlt {

// Degree discipline for the rational data Q/P. Strict demands
// deg P > deg Q + 2 (residue sum vanishes, transforms fall off like 1/p^2);
// Relaxed accepts any strictly proper fraction, which is all the closed
// forms need, and attaches a warning below the strict margin.
enum class Strictness { Strict, Relaxed };

struct RationalSpec {
  Polynomial numerator;
  Polynomial denominator;
  Strictness strictness = Strictness::Strict;
};

struct SectorInfo {
  double phi0_sup;  // supremum of admissible rotation angles, in (0, pi/2]
};

// The signal Z(x) = sum_k gamma_k e^{lambda_k x} with Re lambda_k < 0.
// Immutable after construction; an empty term list is the zero signal.
class ExponentialSum {
 public:
  ExponentialSum() = default;

  // Validates pole constraints, measures separation, and detects whether the
  // term multiset is closed under simultaneous conjugation (real_signal).
  static ExponentialSum from_terms(std::vector<PoleResidue> terms,
                                   std::vector<std::string> warnings = {});

  const std::vector<PoleResidue>& terms() const { return terms_; }
  bool real_signal() const { return real_signal_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool empty() const { return terms_.empty(); }

  // Slowest decay rate min_k(-Re lambda_k); only defined for nonempty models.
  double alpha_min() const;

 private:
  std::vector<PoleResidue> terms_;
  bool real_signal_ = true;
  std::vector<std::string> warnings_;
};

// Factor the denominator, compute residues, and validate the pole set.
ExponentialSum build_model(const RationalSpec& spec, double tol = 1e-12);

// Z(x) = sum gamma_k e^{lambda_k x}; real_signal models return a real value
// (the roundoff imaginary part is dropped).
Complex eval_signal(const ExponentialSum& model, double x);

// Half-line extension Z_plus: 2 Z(x) for x > 0, 0 for x < 0, Z(0) at x = 0
// (midpoint convention).
Complex plus_extension(const ExponentialSum& model, double x);

// phi0_sup = min_k arctan(alpha_k / |beta_k|), with pi/2 for real poles.
SectorInfo admissible_sector(const ExponentialSum& model);

}  // namespace dlt
