#include "dlt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace dlt {

namespace {

constexpr int kMaxPanels = 2000;
constexpr double kRelFloor = 50.0 * std::numeric_limits<double>::epsilon();

// QUADPACK 15-point Kronrod nodes with embedded 7-point Gauss rule.
// Gauss nodes are kXgk[1], kXgk[3], kXgk[5] and the midpoint.
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double err;
  double abs_integral;
};

Panel eval_panel(const RealIntegrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex k15 = kWgk[7] * fc;
  Complex g7 = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const Complex f1 = f(c - dx);
    const Complex f2 = f(c + dx);
    k15 += kWgk[i] * (f1 + f2);
    resabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) g7 += kWg[i / 2] * (f1 + f2);
  }
  return {a, b, h * k15, h * std::abs(k15 - g7), h * resabs};
}

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo,
                     std::size_t hi) {
  if (hi - lo <= 4) {
    Complex s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

QuadResult finish(std::vector<Panel>& panels) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<Complex> values;
  values.reserve(panels.size());
  double err = 0.0;
  for (const Panel& p : panels) {
    values.push_back(p.value);
    err += p.err;
  }
  return {pairwise_sum(values, 0, values.size()), err,
          static_cast<int>(panels.size())};
}

QuadResult adaptive(const RealIntegrand& f, double a, double b, double tol,
                    int initial_panels) {
  std::vector<Panel> panels;
  panels.reserve(64);
  const int n0 = std::max(1, initial_panels);
  for (int i = 0; i < n0; ++i) {
    const double pa = a + (b - a) * i / n0;
    const double pb = a + (b - a) * (i + 1) / n0;
    panels.push_back(eval_panel(f, pa, pb));
  }
  while (true) {
    double total_err = 0.0;
    double total_abs = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total_err += panels[i].err;
      total_abs += panels[i].abs_integral;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    if (total_err <= std::max(tol, kRelFloor * total_abs)) return finish(panels);
    if (static_cast<int>(panels.size()) >= kMaxPanels) {
      QuadResult best = finish(panels);
      throw ToleranceNotMetError("quadrature: tolerance not met within panel budget",
                                 best);
    }
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    panels[worst] = eval_panel(f, p.a, mid);
    panels.push_back(eval_panel(f, mid, p.b));
  }
}

// Crude magnitude scale for the tail bound, probed on the first e-foldings.
double decay_scale(const RealIntegrand& f, double decay_rate) {
  double c = 0.0;
  for (int k = 0; k <= 8; ++k) {
    const double x = k / decay_rate;
    c = std::max(c, std::abs(f(x)) * std::exp(std::min(decay_rate * x, 600.0)));
  }
  return c;
}

}  // namespace

QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              double tol) {
  if (!(b >= a)) throw InvalidInputError("integrate_interval: requires b >= a");
  if (a == b) return {0.0, 0.0, 1};
  return adaptive(f, a, b, tol, 2);
}

QuadResult integrate_decaying(const RealIntegrand& f, double decay_rate,
                              double tol) {
  if (!(decay_rate > 0.0))
    throw InvalidInputError("integrate_decaying: requires decay_rate > 0");
  if (!(tol > 0.0)) throw InvalidInputError("integrate_decaying: requires tol > 0");
  const double c = decay_scale(f, decay_rate);
  if (c == 0.0) return {0.0, 0.0, 1};
  // C e^{-dX} / d < tol/10
  double x_max = std::log(10.0 * c / (decay_rate * tol)) / decay_rate;
  x_max = std::clamp(x_max, 8.0 / decay_rate, 2000.0 / decay_rate);
  return adaptive(f, 0.0, x_max, tol, 16);
}

QuadResult integrate_pv(const RealIntegrand& g, double s, double decay_rate,
                        double tol, double delta) {
  if (!(s > 0.0)) throw InvalidInputError("integrate_pv: requires s > 0");
  if (delta == 0.0) delta = std::min(0.5 * s, 1.0);
  if (!(delta > 0.0 && delta <= 0.5 * s))
    throw InvalidInputError("integrate_pv: requires 0 < delta <= s/2");
  const RealIntegrand folded = [&](double u) {
    return (g(s + u) - g(s - u)) / u;
  };
  const QuadResult win = integrate_interval(folded, 0.0, delta, tol / 3.0);
  const RealIntegrand left = [&](double x) { return g(x) / (x - s); };
  const QuadResult lo = integrate_interval(left, 0.0, s - delta, tol / 3.0);
  const RealIntegrand tail = [&](double u) {
    return g(s + delta + u) / (delta + u);
  };
  const QuadResult hi = integrate_decaying(tail, decay_rate, tol / 3.0);
  return {win.value + lo.value + hi.value,
          win.error_estimate + lo.error_estimate + hi.error_estimate,
          win.panels_used + lo.panels_used + hi.panels_used};
}

QuadResult integrate_ray(const ComplexIntegrand& f, double theta,
                         double decay_rate, double tol) {
  if (!(std::abs(theta) < 1.5707963267948966))
    throw InvalidInputError("integrate_ray: requires |theta| < pi/2");
  const Complex rot = std::polar(1.0, theta);
  const RealIntegrand rotated = [&](double t) { return f(t * rot) * rot; };
  return integrate_decaying(rotated, decay_rate, tol);
}

}  // namespace dlt
