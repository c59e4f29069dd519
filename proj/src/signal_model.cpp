#include "dlt/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dlt {

namespace {

constexpr double kConjPairTol = 1e-10;

double max_pole_mag(const std::vector<PoleResidue>& terms) {
  double m = 0.0;
  for (const auto& t : terms) m = std::max(m, std::abs(t.pole));
  return m;
}

double max_residue_mag(const std::vector<PoleResidue>& terms) {
  double m = 0.0;
  for (const auto& t : terms) m = std::max(m, std::abs(t.residue));
  return m;
}

// Multiset closure under (pole, residue) -> (conj pole, conj residue).
bool conjugate_closed(const std::vector<PoleResidue>& terms) {
  const double pole_tol = kConjPairTol * (1.0 + max_pole_mag(terms));
  const double res_tol = kConjPairTol * (1.0 + max_residue_mag(terms));
  std::vector<bool> used(terms.size(), false);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (used[i]) continue;
    const Complex target = std::conj(terms[i].pole);
    bool found = false;
    for (std::size_t j = i; j < terms.size(); ++j) {
      if (used[j] && j != i) continue;
      if (std::abs(terms[j].pole - target) <= pole_tol &&
          std::abs(terms[j].residue - std::conj(terms[i].residue)) <= res_tol) {
        used[i] = used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// For real-coefficient denominators, snap near-real roots onto the axis and
// make conjugate pairs exact, so the term list is bitwise symmetric.
std::vector<Complex> symmetrize_roots(std::vector<Complex> roots) {
  double scale = 1.0;
  for (const Complex& r : roots) scale = std::max(scale, std::abs(r));
  const double tol = 1e-8 * scale;
  for (Complex& r : roots)
    if (std::abs(r.imag()) <= tol) r = Complex(r.real(), 0.0);
  std::vector<bool> paired(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (paired[i] || roots[i].imag() <= 0.0) continue;
    std::size_t best = roots.size();
    double best_dist = tol;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (paired[j] || roots[j].imag() >= 0.0) continue;
      const double dist = std::abs(roots[j] - std::conj(roots[i]));
      if (dist <= best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best < roots.size()) {
      roots[best] = std::conj(roots[i]);
      paired[i] = paired[best] = true;
    }
  }
  std::sort(roots.begin(), roots.end(), [](Complex l, Complex r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  return roots;
}

}  // namespace

ExponentialSum ExponentialSum::from_terms(std::vector<PoleResidue> terms,
                                          std::vector<std::string> warnings) {
  for (const auto& t : terms) {
    if (t.pole == 0.0)
      throw InvalidInputError("ExponentialSum: pole at the origin");
    if (!(t.pole.real() < 0.0))
      throw InvalidInputError("ExponentialSum: pole outside admissible half-plane");
  }
  const double sep = kPoleSeparationRel * max_pole_mag(terms);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (std::abs(terms[i].pole - terms[j].pole) <= sep)
        throw IllConditionedError("ExponentialSum: poles below separation threshold");

  ExponentialSum out;
  out.terms_ = std::move(terms);
  out.real_signal_ = conjugate_closed(out.terms_);
  out.warnings_ = std::move(warnings);
  return out;
}

double ExponentialSum::alpha_min() const {
  double a = std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) a = std::min(a, -t.pole.real());
  return a;
}

ExponentialSum build_model(const RationalSpec& spec, double tol) {
  const int n = spec.numerator.degree();
  const int l = spec.denominator.degree();
  if (l < 1) throw InvalidInputError("build_model: denominator must have degree >= 1");
  std::vector<std::string> warnings;
  if (spec.strictness == Strictness::Strict) {
    if (l <= n + 2)
      throw InvalidInputError("build_model: Strict requires deg P > deg Q + 2");
  } else {
    if (l < n + 1)
      throw InvalidInputError("build_model: Relaxed requires deg P > deg Q");
    if (l <= n + 2)
      warnings.push_back(
          "degree margin deg P > deg Q + 2 not satisfied; closed forms remain valid "
          "but the residue sum need not vanish");
  }

  std::vector<Complex> roots =
      find_roots(spec.denominator, RootOptions{.tol = tol});
  if (spec.denominator.has_real_coeffs(1e-14))
    roots = symmetrize_roots(std::move(roots));

  std::vector<PoleResidue> terms =
      compute_residues(spec.numerator, spec.denominator, roots);
  return ExponentialSum::from_terms(std::move(terms), std::move(warnings));
}

Complex eval_signal(const ExponentialSum& model, double x) {
  Complex sum = 0.0;
  for (const auto& t : model.terms()) sum += t.residue * std::exp(t.pole * x);
  if (model.real_signal()) return {sum.real(), 0.0};
  return sum;
}

Complex plus_extension(const ExponentialSum& model, double x) {
  if (x > 0.0) return 2.0 * eval_signal(model, x);
  if (x < 0.0) return 0.0;
  return eval_signal(model, 0.0);
}

SectorInfo admissible_sector(const ExponentialSum& model) {
  double phi = std::numbers::pi / 2.0;
  for (const auto& t : model.terms()) {
    const double alpha = -t.pole.real();
    const double beta = t.pole.imag();
    if (beta != 0.0) phi = std::min(phi, std::atan(alpha / std::abs(beta)));
  }
  return {phi};
}

}  // namespace dlt
