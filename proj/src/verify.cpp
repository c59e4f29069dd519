#include "dlt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace dlt {

namespace {

std::string format_err(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// Deterministic uniform doubles independent of library distributions.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : state_(seed ? seed : 1) {}
  double next() {
    // splitmix64 step
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  double range(double lo, double hi) { return lo + (hi - lo) * next(); }
  int range_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() * (hi - lo + 1)) % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

struct ErrTracker {
  double max_abs = 0.0;
  double max_rel = 0.0;
  double worst = 0.0;
  bool seeded = false;
  void update(double abs_err, double rel_err, double point) {
    if (!seeded || rel_err > max_rel) {
      max_rel = rel_err;
      worst = point;
      seeded = true;
    }
    max_abs = std::max(max_abs, abs_err);
  }
};

std::vector<int> spot_indices(int n, int count) {
  std::vector<int> idx;
  for (int k = 0; k < count; ++k)
    idx.push_back(static_cast<int>(static_cast<long long>(k) * (n - 1) /
                                   std::max(1, count - 1)));
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

std::vector<double> TransformGrid::abscissae() const {
  if (!(s_min > 0.0) || !(s_max > s_min))
    throw InvalidInputError("TransformGrid: requires 0 < s_min < s_max");
  if (points < 2) throw InvalidInputError("TransformGrid: requires points >= 2");
  std::vector<double> s(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    s[i] = spacing == GridSpacing::Logarithmic
               ? s_min * std::pow(s_max / s_min, t)
               : s_min + (s_max - s_min) * t;
  }
  return s;
}

VerificationReport verify_transform_identity(const ExponentialSum& model,
                                   const TransformGrid& grid, double tol) {
  VerificationReport rep;
  rep.identity_name = "double_transform_identity";
  rep.grid = grid;
  const std::vector<double> s = grid.abscissae();

  ErrTracker track;
  std::vector<Complex> ll(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    ll[i] = double_laplace(model, s[i]);
    const Complex ff = double_fourier(model, s[i]);
    const double abs_err = std::abs(ll[i] + Complex(0.0, 1.0) * ff);
    track.update(abs_err, abs_err / (1.0 + std::abs(ll[i])), s[i]);
  }

  double worst_oracle = 0.0;
  const double spot_tol = 1e-8;
  for (int i : spot_indices(grid.points, 5)) {
    const Complex ll_q =
        double_laplace(model, s[i], EvalMode::QuadratureOracle, 1e-10);
    const Complex ff_q =
        double_fourier(model, s[i], EvalMode::QuadratureOracle, 1e-10);
    const Complex ff = double_fourier(model, s[i]);
    worst_oracle = std::max(
        worst_oracle, std::abs(ll[i] - ll_q) / (1.0 + std::abs(ll[i])));
    worst_oracle =
        std::max(worst_oracle, std::abs(ff - ff_q) / (1.0 + std::abs(ff)));
  }

  rep.max_abs_err = track.max_abs;
  rep.max_rel_err = track.max_rel;
  rep.worst_point = track.worst;
  rep.passed = track.max_rel <= tol && worst_oracle <= spot_tol;
  rep.oracle_description =
      "Stieltjes and rotated-ray quadrature at 5 spot points; worst "
      "closed-vs-oracle rel err " +
      format_err(worst_oracle);
  return rep;
}

VerificationReport verify_inversion(const ExponentialSum& model,
                                   const TransformGrid& grid, double tol) {
  VerificationReport rep;
  rep.identity_name = "inversion_recovery";
  rep.grid = grid;
  const std::vector<double> s = grid.abscissae();

  ErrTracker track;
  for (double si : s) {
    const double z_true = eval_signal(model, si).real();
    const double z_rec = invert(model, si);
    const double abs_err = std::abs(z_rec - z_true);
    track.update(abs_err, abs_err / (1.0 + std::abs(z_true)), si);
  }

  // The closed-form continuation must be the limit of evaluations just above
  // the cut; O(eps) boundary error expected.
  const double eps = 1e-6;
  double worst_limit = 0.0;
  for (int i : spot_indices(grid.points, 3)) {
    const Complex bv = boundary_value(model, s[i]).value;
    const Complex near_cut = double_laplace(model, Complex(-s[i], eps));
    worst_limit = std::max(worst_limit,
                           std::abs(bv - near_cut) / (1.0 + std::abs(bv)));
  }

  rep.max_abs_err = track.max_abs;
  rep.max_rel_err = track.max_rel;
  rep.worst_point = track.worst;
  rep.passed = track.max_rel <= tol && worst_limit <= 1e-4;
  rep.oracle_description =
      "direct signal evaluation; continuation limit check at eps=1e-6, worst "
      "rel diff " +
      format_err(worst_limit);
  return rep;
}

VerificationReport verify_realpart_identity(const ExponentialSum& model,
                                            const TransformGrid& grid,
                                            double tol) {
  VerificationReport rep;
  rep.identity_name = "realpart_plus_extension_identity";
  rep.grid = grid;
  const std::vector<double> s = grid.abscissae();

  ErrTracker track;
  for (double si : s) {
    const Complex ff_pos = double_fourier(model, si);
    const double err_a = std::abs(ff_pos.real());
    track.update(err_a, err_a / (1.0 + std::abs(ff_pos)), si);

    const Complex ff_neg = double_fourier(model, -si);
    const double z = eval_signal(model, si).real();
    const double err_b = std::abs(ff_neg.real() - std::numbers::pi * z);
    track.update(err_b, err_b / (1.0 + std::numbers::pi * std::abs(z)), si);
  }

  rep.max_abs_err = track.max_abs;
  rep.max_rel_err = track.max_rel;
  rep.worst_point = track.worst;
  rep.passed = track.max_rel <= tol;
  rep.oracle_description =
      "Re FF vanishes on (0,inf); Re FF(-s) = pi Z(s) against direct signal "
      "evaluation";
  return rep;
}

VerificationReport verify_residue_normalization(const RationalSpec& spec,
                                                int probes, double tol,
                                                std::uint64_t seed) {
  VerificationReport rep;
  rep.identity_name = "residue_normalization";
  rep.grid = TransformGrid{};
  try {
    const ExponentialSum model = build_model(spec);
    Uniform rng(seed);
    ErrTracker track;
    for (int k = 0; k < probes; ++k) {
      const Complex p(rng.range(0.0, 5.0), rng.range(-5.0, 5.0));
      const Complex closed = laplace(model, p);
      const Complex rational =
          spec.numerator.eval(p) / spec.denominator.eval(p);
      const double abs_err = std::abs(closed - rational);
      track.update(abs_err, abs_err / (1.0 + std::abs(rational)), std::abs(p));
    }
    rep.max_abs_err = track.max_abs;
    rep.max_rel_err = track.max_rel;
    rep.worst_point = track.worst;
    rep.passed = track.max_rel <= tol;
    rep.oracle_description =
        "L(Z)(p) vs direct Q(p)/P(p) at seeded probes with Re p >= 0; "
        "standard residue normalization (no 2*pi*i factor)";
  } catch (const std::exception& e) {
    rep.passed = false;
    rep.oracle_description = std::string("model construction failed: ") + e.what();
  }
  return rep;
}

std::vector<ExponentialSum> generate_models(std::uint64_t seed, int count,
                                            const GeneratorConfig& cfg) {
  if (cfg.degree_min < 3 || cfg.degree_max < cfg.degree_min)
    throw InvalidInputError("generate_models: degree range must start at >= 3");
  if (!(cfg.alpha_min > 0.0) || cfg.alpha_max < cfg.alpha_min)
    throw InvalidInputError("generate_models: alpha range must be positive");

  Uniform rng(seed);
  std::vector<ExponentialSum> models;
  models.reserve(count);
  while (static_cast<int>(models.size()) < count) {
    bool built = false;
    // A beta range pinned inside (-0.05, 0.05) cannot host a separated
    // conjugate pair; fall back to all-real spectra.
    const bool beta_usable = cfg.beta_max >= 0.05 || cfg.beta_min <= -0.05;
    for (int attempt = 0; attempt < 1000 && !built; ++attempt) {
      const int l = rng.range_int(cfg.degree_min, cfg.degree_max);
      const int pairs = beta_usable ? rng.range_int(0, l / 2) : 0;
      const int reals = l - 2 * pairs;

      std::vector<Complex> roots;
      for (int k = 0; k < pairs; ++k) {
        const double alpha = rng.range(cfg.alpha_min, cfg.alpha_max);
        double beta = 0.0;
        do {
          beta = rng.range(cfg.beta_min, cfg.beta_max);
        } while (std::abs(beta) < 0.05);
        roots.emplace_back(-alpha, beta);
        roots.emplace_back(-alpha, -beta);
      }
      for (int k = 0; k < reals; ++k)
        roots.emplace_back(-rng.range(cfg.alpha_min, cfg.alpha_max), 0.0);

      double max_mag = 0.0;
      for (const Complex& r : roots) max_mag = std::max(max_mag, std::abs(r));
      bool separated = true;
      for (std::size_t i = 0; i < roots.size() && separated; ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
          if (std::abs(roots[i] - roots[j]) < 1e-3 * max_mag) {
            separated = false;
            break;
          }
      if (!separated) continue;

      const int n = rng.range_int(0, l - 3);
      std::vector<Complex> qc(n + 1);
      for (int k = 0; k <= n; ++k) qc[k] = rng.range(-1.0, 1.0);
      const double lead_sign = rng.next() < 0.5 ? -1.0 : 1.0;
      qc[n] = lead_sign * rng.range(0.1, 1.0);

      const RationalSpec spec{Polynomial(std::move(qc)),
                              Polynomial::from_roots(roots),
                              Strictness::Strict};
      try {
        models.push_back(build_model(spec));
        built = true;
      } catch (const std::exception&) {
        // resample on any constraint violation
      }
    }
    if (!built)
      throw ConvergenceError("generate_models: could not build a valid model", 0.0);
  }
  return models;
}

}  // namespace dlt
