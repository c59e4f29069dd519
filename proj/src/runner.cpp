#include "dlt/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace dlt {

namespace {

std::string fmt_complex(Complex z) {
  std::string s = format_g17(z.real());
  s += (std::signbit(z.imag()) ? "-" : "+");
  s += format_g17(std::abs(z.imag()));
  s += "i";
  return s;
}

std::string grid_to_text(const TransformGrid& g) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d points in [%g, %g] (%s)", g.points,
                g.s_min, g.s_max,
                g.spacing == GridSpacing::Logarithmic ? "log" : "linear");
  return buf;
}

std::vector<int> spot_indices(int n, int count) {
  std::vector<int> idx;
  for (int k = 0; k < count; ++k)
    idx.push_back(static_cast<int>(static_cast<long long>(k) * (n - 1) /
                                   std::max(1, count - 1)));
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

int run_analyze(const RunConfig& cfg, std::ostream& out) {
  const ExponentialSum model = model_from_config(cfg);
  out << "terms: " << model.terms().size() << "\n";
  out << "pole, residue:\n";
  for (const auto& t : model.terms())
    out << "  " << fmt_complex(t.pole) << ", " << fmt_complex(t.residue) << "\n";
  out << "real_signal: " << (model.real_signal() ? "true" : "false") << "\n";
  out << "phi0_sup: " << format_g17(admissible_sector(model).phi0_sup) << "\n";
  for (const auto& w : model.warnings()) out << "warning: " << w << "\n";
  return 0;
}

int run_transform(const RunConfig& cfg, std::ostream& out) {
  const ExponentialSum model = model_from_config(cfg);
  const std::vector<double> s = cfg.grid.abscissae();
  const std::vector<int> spots = spot_indices(cfg.grid.points, 5);
  out << "s,re_r,im_r,oracle_rel_diff\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Complex r = double_laplace(model, s[i]);
    out << format_g17(s[i]) << "," << format_g17(r.real()) << ","
        << format_g17(r.imag()) << ",";
    if (std::find(spots.begin(), spots.end(), static_cast<int>(i)) != spots.end()) {
      const Complex rq = double_laplace(model, s[i], EvalMode::QuadratureOracle,
                                        cfg.tol.quadrature);
      out << format_g17(std::abs(r - rq) / (1.0 + std::abs(r)));
    }
    out << "\n";
  }
  return 0;
}

int run_invert(const RunConfig& cfg, std::ostream& out) {
  const ExponentialSum model = model_from_config(cfg);
  const std::vector<double> s = cfg.grid.abscissae();
  out << "s,Z_true,Z_rec,abs_err,rel_err\n";
  for (double si : s) {
    const double z_true = eval_signal(model, si).real();
    const double z_rec = invert(model, si);
    const double abs_err = std::abs(z_rec - z_true);
    out << format_g17(si) << "," << format_g17(z_true) << ","
        << format_g17(z_rec) << "," << format_g17(abs_err) << ","
        << format_g17(abs_err / (1.0 + std::abs(z_true))) << "\n";
  }
  return 0;
}

std::vector<VerificationReport> run_suites(const RunConfig& cfg,
                                           const ExponentialSum& model) {
  std::vector<VerificationReport> reports;
  reports.push_back(verify_transform_identity(model, cfg.grid, cfg.tol.transform_identity));
  reports.push_back(verify_inversion(model, cfg.grid, cfg.tol.inversion));
  reports.push_back(verify_realpart_identity(model, cfg.grid, cfg.tol.realpart));
  return reports;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const ExponentialSum model = model_from_config(cfg);
  std::vector<VerificationReport> reports = run_suites(cfg, model);
  if (has_rational_source(cfg)) {
    reports.push_back(verify_residue_normalization(
        rational_from_config(cfg), 20, cfg.tol.residue_norm, cfg.seed));
  }
  bool all = true;
  for (const auto& r : reports) {
    out << report_to_text(r) << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::vector<ExponentialSum> models = generate_models(cfg.seed, cfg.count);
  out << "model_index,identity,max_abs_err,max_rel_err,worst_s,passed\n";

  struct Aggregate {
    double max_abs = 0.0;
    double max_rel = 0.0;
    int worst_model = -1;
    double worst_s = 0.0;
    bool all_passed = true;
  };
  std::vector<std::string> names;
  std::vector<Aggregate> agg;

  for (std::size_t m = 0; m < models.size(); ++m) {
    const std::vector<VerificationReport> reports = run_suites(cfg, models[m]);
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& r = reports[k];
      out << m << "," << r.identity_name << "," << format_g17(r.max_abs_err)
          << "," << format_g17(r.max_rel_err) << ","
          << format_g17(r.worst_point) << "," << (r.passed ? 1 : 0) << "\n";
      if (k >= names.size()) {
        names.push_back(r.identity_name);
        agg.push_back({});
      }
      Aggregate& a = agg[k];
      a.max_abs = std::max(a.max_abs, r.max_abs_err);
      if (r.max_rel_err >= a.max_rel) {
        a.max_rel = r.max_rel_err;
        a.worst_model = static_cast<int>(m);
        a.worst_s = r.worst_point;
      }
      a.all_passed = a.all_passed && r.passed;
    }
  }

  bool all = true;
  std::ostringstream rep;
  for (std::size_t k = 0; k < names.size(); ++k) {
    rep << "identity: " << names[k] << "\n";
    rep << "models: " << models.size() << "\n";
    rep << "max_abs_err: " << format_g17(agg[k].max_abs) << "\n";
    rep << "max_rel_err: " << format_g17(agg[k].max_rel) << " (model "
        << agg[k].worst_model << ", s = " << format_g17(agg[k].worst_s) << ")\n";
    rep << "result: " << (agg[k].all_passed ? "PASS" : "FAIL") << "\n\n";
    all = all && agg[k].all_passed;
  }
  // The aggregate report goes to stdout; the CSV stays on the data stream.
  if (&out == &std::cout) out << "\n" << rep.str();
  else std::cout << rep.str();
  return all ? 0 : 1;
}

}  // namespace

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "identity: " << r.identity_name << "\n";
  out << "grid: " << grid_to_text(r.grid) << "\n";
  out << "oracle: " << r.oracle_description << "\n";
  out << "max_abs_err: " << format_g17(r.max_abs_err) << "\n";
  out << "max_rel_err: " << format_g17(r.max_rel_err) << "\n";
  out << "worst_s: " << format_g17(r.worst_point) << "\n";
  out << "result: " << (r.passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

int run_command(const RunConfig& cfg) {
  std::ofstream file;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file)
      throw InvalidInputError("cannot open output file '" + cfg.out_path + "'");
  }
  std::ostream& out = cfg.out_path.empty() ? std::cout : file;

  switch (cfg.command) {
    case Command::Analyze: return run_analyze(cfg, out);
    case Command::Transform: return run_transform(cfg, out);
    case Command::Invert: return run_invert(cfg, out);
    case Command::Verify: return run_verify(cfg, out);
    case Command::Sweep: return run_sweep(cfg, out);
  }
  throw InvalidInputError("unknown command");
}

}  // namespace dlt
