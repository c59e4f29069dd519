#include "dlt/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dlt {

namespace {

double max_coeff_mag(const Polynomial& p) {
  double m = 0.0;
  for (const Complex& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

// |p(r)| <= tol * maxcoeff * max(1,|r|)^deg defines an acceptable root.
double residual_scale(double maxcoeff, Complex r, int deg) {
  return maxcoeff * std::pow(std::max(1.0, std::abs(r)), deg);
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : coeffs_(coeffs) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{1.0};
  for (const Complex& r : roots) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i)
      c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

bool Polynomial::has_real_coeffs(double rel_tol) const {
  const double scale = max_coeff_mag(*this);
  for (const Complex& c : coeffs_)
    if (std::abs(c.imag()) > rel_tol * scale) return false;
  return true;
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

std::vector<Complex> find_roots(const Polynomial& p, const RootOptions& opts) {
  const int n = p.degree();
  if (n < 1) throw InvalidInputError("find_roots: degree must be >= 1");

  // Monic copy for the iteration; residuals are checked against the original.
  std::vector<Complex> a(p.coeffs());
  const Complex lead = a.back();
  for (Complex& c : a) c /= lead;

  // Cauchy bound on root magnitudes.
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
  bound += 1.0;

  // Equally spaced starting points on the bound circle, deterministically
  // jittered so no starting configuration is symmetric to the iteration.
  std::vector<Complex> x(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto jitter = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
  };
  for (int k = 0; k < n; ++k) {
    const double angle =
        2.0 * 3.14159265358979323846 * (k + 0.25) / n + 0.2 * jitter();
    const double radius = bound * (1.0 + 0.05 * jitter());
    x[k] = std::polar(radius, angle);
  }

  const Polynomial monic{std::vector<Complex>(a)};
  const Polynomial dmonic = monic.derivative();

  const double maxcoeff = max_coeff_mag(p);

  // Aberth-Ehrlich simultaneous iteration.
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex pv = monic.eval(x[k]);
      if (pv == 0.0) continue;
      const Complex pd = dmonic.eval(x[k]);
      Complex newton = (pd == 0.0) ? Complex(0.0) : pv / pd;
      if (pd == 0.0) {
        x[k] += Complex(1e-6 * bound, 1e-6 * bound);
        max_step = std::numeric_limits<double>::max();
        continue;
      }
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex diff = x[k] - x[j];
        if (diff == 0.0) continue;
        repulsion += 1.0 / diff;
      }
      const Complex denom = 1.0 - newton * repulsion;
      const Complex step = (denom == 0.0) ? newton : newton / denom;
      x[k] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(x[k])));
    }
    if (max_step < 1e-15) break;
  }

  // Newton polishing on the original polynomial.
  const Polynomial dp = p.derivative();
  for (int k = 0; k < n; ++k) {
    for (int it = 0; it < 8; ++it) {
      const Complex pv = p.eval(x[k]);
      const Complex pd = dp.eval(x[k]);
      if (pd == 0.0 || pv == 0.0) break;
      const Complex step = pv / pd;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(x[k]))) break;
      x[k] -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(x[k]))) break;
    }
  }

  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const double rel = std::abs(p.eval(x[k])) /
                       std::max(residual_scale(maxcoeff, x[k], n),
                                std::numeric_limits<double>::min());
    worst = std::max(worst, rel);
  }
  if (worst > opts.tol)
    throw ConvergenceError("find_roots: iteration cap reached", worst);

  std::sort(x.begin(), x.end(), [](Complex l, Complex r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  return x;
}

std::vector<PoleResidue> compute_residues(const Polynomial& q,
                                          const Polynomial& p,
                                          const std::vector<Complex>& roots) {
  if (q.degree() >= p.degree())
    throw InvalidInputError("compute_residues: requires deg Q < deg P");
  if (static_cast<int>(roots.size()) != p.degree())
    throw InvalidInputError("compute_residues: root count must equal deg P");

  double max_mag = 0.0;
  for (const Complex& r : roots) max_mag = std::max(max_mag, std::abs(r));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= kPoleSeparationRel * max_mag)
        throw IllConditionedError("compute_residues: ill-conditioned poles");

  const Polynomial dp = p.derivative();
  std::vector<PoleResidue> out;
  out.reserve(roots.size());
  for (const Complex& r : roots) {
    const Complex pd = dp.eval(r);
    if (pd == 0.0)
      throw IllConditionedError("compute_residues: vanishing P' at a root");
    out.push_back({r, q.eval(r) / pd});
  }
  return out;
}

}  // namespace dlt
