#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlt/verify.hpp"

namespace dlt {

enum class Command { Analyze, Transform, Invert, Verify, Sweep };

struct Tolerances {
  double transform_identity = 1e-9;
  double inversion = 1e-8;
  double realpart = 1e-6;
  double residue_norm = 1e-10;
  double quadrature = 1e-10;
};

// Parsed form of the INI-style run configuration. Exactly one model source
// may be populated: (num_coeffs, den_coeffs), (num_coeffs, den_roots), or
// (poles, residues); sweep generates its own ensemble and needs none.
struct RunConfig {
  Command command = Command::Analyze;
  std::vector<Complex> num_coeffs;
  std::vector<Complex> den_coeffs;
  std::vector<Complex> den_roots;
  std::vector<Complex> poles;
  std::vector<Complex> residues;
  Strictness strictness = Strictness::Strict;
  TransformGrid grid;
  Tolerances tol;
  std::string out_path;  // empty writes to stdout
  std::uint64_t seed = 1;
  int count = 100;
  bool has_model_source = false;
};

// Strict parser: unknown sections or keys are errors with a line number.
// The command is normally supplied by the CLI, which overrides any
// `command` key found under [run].
RunConfig parse_config(const std::string& text);

Command parse_command_name(const std::string& name);

// Builds the configured model; throws InvalidInputError if the config has
// no model source.
ExponentialSum model_from_config(const RunConfig& config);

// True when the config carries rational data (needed by the residue suite).
bool has_rational_source(const RunConfig& config);
RationalSpec rational_from_config(const RunConfig& config);

}  // namespace dlt
