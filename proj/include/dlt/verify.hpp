#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlt/transforms.hpp"

namespace dlt {

enum class GridSpacing { Linear, Logarithmic };

struct TransformGrid {
  double s_min = 0.1;
  double s_max = 10.0;
  int points = 64;
  GridSpacing spacing = GridSpacing::Logarithmic;

  std::vector<double> abscissae() const;  // validates the invariants
};

struct VerificationReport {
  std::string identity_name;
  TransformGrid grid;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double worst_point = 0.0;
  bool passed = false;
  std::string oracle_description;
};

// |LL(s) + i FF(s)| over the grid in closed form, with both operators
// spot-checked against their quadrature oracles at 5 grid points.
VerificationReport verify_transform_identity(const ExponentialSum& model,
                                   const TransformGrid& grid, double tol);

// Inversion recovery |invert(s) - Z(s)| / (1 + |Z(s)|) over the grid, with a
// small-epsilon continuation cross-check at 3 points.
VerificationReport verify_inversion(const ExponentialSum& model,
                                   const TransformGrid& grid, double tol);

// Re FF(s) = 0 for s > 0 and Re FF(-s) = pi Z(s), both over the grid.
VerificationReport verify_realpart_identity(const ExponentialSum& model,
                                            const TransformGrid& grid,
                                            double tol);

// L(Z)(p) = Q(p)/P(p) at seeded probes with Re p >= 0 (standard residue
// normalization). Build failures surface as a failed report, not a throw.
VerificationReport verify_residue_normalization(const RationalSpec& spec,
                                                int probes, double tol,
                                                std::uint64_t seed = 1);

struct GeneratorConfig {
  int degree_min = 3;
  int degree_max = 8;
  double alpha_min = 0.2;
  double alpha_max = 5.0;
  double beta_min = -5.0;
  double beta_max = 5.0;
};

// Deterministic seeded ensemble of valid real_signal models built from
// rational specs satisfying the strict degree condition.
std::vector<ExponentialSum> generate_models(std::uint64_t seed, int count,
                                            const GeneratorConfig& cfg = {});

}  // namespace dlt
