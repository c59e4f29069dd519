#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dlt/verify.hpp"

using dlt::Complex;
using dlt::ExponentialSum;
using dlt::Polynomial;
using dlt::TransformGrid;
using dlt::VerificationReport;

namespace {

ExponentialSum single_pole() {
  return ExponentialSum::from_terms({{Complex(-1.0, 0.0), Complex(1.0, 0.0)}});
}

dlt::RationalSpec triple_spec() {
  const Complex roots[] = {Complex(-1, 0), Complex(-2, 0), Complex(-3, 0)};
  return {Polynomial{Complex(1.0)}, Polynomial::from_roots(roots),
          dlt::Strictness::Strict};
}

}  // namespace

TEST_CASE("grid abscissae") {
  TransformGrid g;
  const auto s = g.abscissae();
  REQUIRE(s.size() == 64);
  CHECK(s.front() == doctest::Approx(0.1));
  CHECK(s.back() == doctest::Approx(10.0));
  CHECK(s[1] / s[0] == doctest::Approx(s[33] / s[32]).epsilon(1e-12));

  TransformGrid lin{1.0, 3.0, 5, dlt::GridSpacing::Linear};
  const auto t = lin.abscissae();
  CHECK(t[1] - t[0] == doctest::Approx(0.5));

  TransformGrid bad{1.0, 0.5, 4, dlt::GridSpacing::Linear};
  CHECK_THROWS_AS(bad.abscissae(), dlt::InvalidInputError);
  TransformGrid few{0.1, 1.0, 1, dlt::GridSpacing::Linear};
  CHECK_THROWS_AS(few.abscissae(), dlt::InvalidInputError);
}

TEST_CASE("transform-identity suite on reference models") {
  const TransformGrid grid;
  VerificationReport r = dlt::verify_transform_identity(single_pole(), grid, 1e-9);
  CHECK(r.passed);
  CHECK(r.max_rel_err <= 1e-9);
  CHECK(r.worst_point >= grid.s_min);
  CHECK(r.worst_point <= grid.s_max);

  const ExponentialSum triple = dlt::build_model(triple_spec());
  r = dlt::verify_transform_identity(triple, grid, 1e-9);
  CHECK(r.passed);

  const ExponentialSum zero;
  r = dlt::verify_transform_identity(zero, grid, 1e-9);
  CHECK(r.passed);
  CHECK(r.max_abs_err == 0.0);
}

TEST_CASE("inversion suite on reference models") {
  const TransformGrid grid;
  VerificationReport r = dlt::verify_inversion(single_pole(), grid, 1e-8);
  CHECK(r.passed);
  CHECK(r.max_rel_err < 1e-12);

  // conjugate pair (Relaxed degree data): recovers 2 e^{-s} cos 2s
  const ExponentialSum pair = ExponentialSum::from_terms(
      {{Complex(-1, 2), Complex(1, 0)}, {Complex(-1, -2), Complex(1, 0)}});
  r = dlt::verify_inversion(pair, grid, 1e-8);
  CHECK(r.passed);

  const ExponentialSum triple = dlt::build_model(triple_spec());
  r = dlt::verify_inversion(triple, grid, 1e-8);
  CHECK(r.passed);
}

TEST_CASE("real-part identity suite") {
  const TransformGrid grid;
  CHECK(dlt::verify_realpart_identity(single_pole(), grid, 1e-9).passed);
  const ExponentialSum triple = dlt::build_model(triple_spec());
  CHECK(dlt::verify_realpart_identity(triple, grid, 1e-8).passed);
  const ExponentialSum zero;
  const VerificationReport r = dlt::verify_realpart_identity(zero, grid, 1e-10);
  CHECK(r.passed);
  CHECK(r.max_abs_err == 0.0);
}

TEST_CASE("residue normalization suite") {
  VerificationReport r = dlt::verify_residue_normalization(triple_spec(), 20, 1e-10);
  CHECK(r.passed);
  CHECK(r.max_rel_err <= 1e-10);
  CHECK(r.oracle_description.find("no 2*pi*i factor") != std::string::npos);

  // a pole in the right half-plane surfaces as a failed report, not a throw
  const Complex bad_roots[] = {Complex(1, 0), Complex(-2, 0), Complex(-3, 0)};
  const dlt::RationalSpec bad{Polynomial{Complex(1.0)},
                              Polynomial::from_roots(bad_roots),
                              dlt::Strictness::Strict};
  VerificationReport rb;
  CHECK_NOTHROW(rb = dlt::verify_residue_normalization(bad, 20, 1e-10));
  CHECK(!rb.passed);
  CHECK(rb.oracle_description.find("failed") != std::string::npos);
}

TEST_CASE("generator determinism and contracts") {
  const auto a = dlt::generate_models(1, 5);
  const auto b = dlt::generate_models(1, 5);
  REQUIRE(a.size() == 5);
  REQUIRE(b.size() == 5);
  for (std::size_t m = 0; m < a.size(); ++m) {
    REQUIRE(a[m].terms().size() == b[m].terms().size());
    for (std::size_t k = 0; k < a[m].terms().size(); ++k) {
      CHECK(a[m].terms()[k].pole == b[m].terms()[k].pole);
      CHECK(a[m].terms()[k].residue == b[m].terms()[k].residue);
    }
  }
  const auto c = dlt::generate_models(2, 5);
  bool any_different = false;
  for (std::size_t m = 0; m < c.size() && !any_different; ++m) {
    if (c[m].terms().size() != a[m].terms().size() ||
        c[m].terms()[0].pole != a[m].terms()[0].pole)
      any_different = true;
  }
  CHECK(any_different);

  for (const auto& model : a) {
    CHECK(model.real_signal());
    const int l = static_cast<int>(model.terms().size());
    CHECK(l >= 3);
    CHECK(l <= 8);
    double max_mag = 0.0;
    for (const auto& t : model.terms())
      max_mag = std::max(max_mag, std::abs(t.pole));
    for (std::size_t i = 0; i < model.terms().size(); ++i)
      for (std::size_t j = i + 1; j < model.terms().size(); ++j)
        CHECK(std::abs(model.terms()[i].pole - model.terms()[j].pole) >
              dlt::kPoleSeparationRel * max_mag);
    // strict degree condition forces a vanishing residue sum
    Complex sum = 0.0;
    double max_res = 0.0;
    for (const auto& t : model.terms()) {
      sum += t.residue;
      max_res = std::max(max_res, std::abs(t.residue));
    }
    CHECK(std::abs(sum) <= 1e-9 * max_res);
  }
}

TEST_CASE("small ensemble passes the inversion suite") {
  const TransformGrid grid;
  for (const auto& model : dlt::generate_models(99, 10)) {
    const VerificationReport r = dlt::verify_inversion(model, grid, 1e-8);
    CAPTURE(r.oracle_description);
    CHECK(r.passed);
  }
}

TEST_CASE("worst point is reproducible") {
  const TransformGrid grid;
  const ExponentialSum triple = dlt::build_model(triple_spec());
  const VerificationReport r = dlt::verify_inversion(triple, grid, 1e-8);
  const double z_true = dlt::eval_signal(triple, r.worst_point).real();
  const double z_rec = dlt::invert(triple, r.worst_point);
  const double rel = std::abs(z_rec - z_true) / (1.0 + std::abs(z_true));
  CHECK(rel == doctest::Approx(r.max_rel_err).epsilon(1e-12));
}

TEST_CASE("generator rejects bad ranges") {
  dlt::GeneratorConfig cfg;
  cfg.degree_min = 2;
  CHECK_THROWS_AS(dlt::generate_models(1, 1, cfg), dlt::InvalidInputError);
  dlt::GeneratorConfig cfg2;
  cfg2.alpha_min = -0.5;
  CHECK_THROWS_AS(dlt::generate_models(1, 1, cfg2), dlt::InvalidInputError);
}
