#include <doctest.h>

#include "hgfm/identities.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>

using hgfm::Backend;
using hgfm::ConeParameter;
using hgfm::Rational;
using RSpec = hgfm::EigenSpectrum<hgfm::Rational>;
using DSpec = hgfm::EigenSpectrum<double>;
using RParams = hgfm::HgfParams<hgfm::Rational>;
using DParams = hgfm::HgfParams<double>;

namespace {

RParams frozen_case() {
  return RParams{Rational(-1), Rational(1, 3), Rational(3), ConeParameter::real_symmetric()};
}

}  // namespace

TEST_CASE("reflection hypotheses: exact membership tests") {
  const int m = 2;
  // The reference case satisfies everything with the j = 1 branch on a.
  auto h = hgfm::check_reflection_hypotheses(frozen_case(), m);
  CHECK(h.terminating);
  CHECK(h.termination_j == 1);
  CHECK(h.termination_param == 'a');
  CHECK(h.c_admissible);
  CHECK(h.cab_admissible);
  CHECK(h.all());

  // Non-terminating parameters.
  h = hgfm::check_reflection_hypotheses(
      RParams{Rational(1, 3), Rational(1, 5), Rational(3), ConeParameter::real_symmetric()}, m);
  CHECK_FALSE(h.terminating);
  CHECK_FALSE(h.all());

  // a = 1/2 at d = 1/2 only terminates through the j = 2 factor.
  h = hgfm::check_reflection_hypotheses(
      RParams{Rational(1, 2), Rational(1, 5), Rational(3), ConeParameter::real_symmetric()}, m);
  CHECK(h.terminating);
  CHECK(h.termination_j == 2);
  CHECK(h.termination_param == 'a');

  // c = 0 violates the c-condition at j = 1.
  h = hgfm::check_reflection_hypotheses(
      RParams{Rational(-1), Rational(1, 3), Rational(0), ConeParameter::real_symmetric()}, m);
  CHECK_FALSE(h.c_admissible);
  CHECK(h.c_violation_j == 1);

  // a = -1, b = 1, c = 1 at m = 1: -a-b+c = 1 lands in N.
  h = hgfm::check_reflection_hypotheses(
      RParams{Rational(-1), Rational(1), Rational(1), ConeParameter::real_symmetric()}, 1);
  CHECK(h.terminating);
  CHECK_FALSE(h.cab_admissible);
  CHECK(h.cab_violation_j == 1);
}

TEST_CASE("reflection formula: exact reference case") {
  const auto rep = hgfm::verify_reflection(frozen_case(), 2,
                                           {RSpec({Rational(1, 4), Rational(1, 2)})},
                                           Backend::exact);
  CHECK(rep.pass);
  CHECK(rep.backend == "exact");
  REQUIRE(rep.probes.size() == 1);
  CHECK(rep.probes[0].lhs == "989/832");
  CHECK(rep.probes[0].rhs == "989/832");
  CHECK(rep.probes[0].abs_residual == 0.0);
  CHECK(rep.hypotheses.size() >= 3);
}

TEST_CASE("reflection formula: exact across m and d, floating for other d") {
  // Exact rational equality on sampled spectra.
  for (int m : {2, 3}) {
    for (const Rational& d : {Rational(1, 2), Rational(1)}) {
      const RParams p{Rational(-2), Rational(2, 5), Rational(7, 2), ConeParameter{d}};
      const auto probes = hgfm::rational_probe_spectra(3, m, Rational(1, 20), Rational(19, 20), 1);
      const auto rep = hgfm::verify_reflection(p, m, probes, Backend::exact);
      CHECK(rep.pass);
      CHECK(rep.max_rel_residual() == 0.0);
    }
  }
  // Floating run at a non-classical cone parameter.
  const RParams p{Rational(-2), Rational(2, 5), Rational(7, 2), ConeParameter{Rational(1, 4)}};
  const auto rep = hgfm::verify_reflection(p, 2,
                                           hgfm::rational_probe_spectra(3, 2, Rational(1, 20),
                                                                        Rational(19, 20), 5),
                                           Backend::floating, hgfm::Truncation{}, 1e-10);
  CHECK(rep.pass);
  CHECK(rep.backend == "floating");
  CHECK(rep.max_rel_residual() <= 1e-10);
}

TEST_CASE("reflection formula: hypothesis violations throw") {
  const auto probe = RSpec({Rational(1, 4), Rational(1, 2)});
  // Non-terminating.
  try {
    hgfm::verify_reflection(
        RParams{Rational(1, 3), Rational(1, 5), Rational(3), ConeParameter::real_symmetric()}, 2,
        {probe}, Backend::exact);
    FAIL("expected HypothesisError");
  } catch (const hgfm::HypothesisError& e) {
    CHECK(e.condition == "termination");
  }
  // Terminating only through j = 2 is rejected for verification.
  CHECK_THROWS_AS(hgfm::verify_reflection(RParams{Rational(1, 2), Rational(1, 5), Rational(3),
                                                  ConeParameter::real_symmetric()},
                                          2, {probe}, Backend::exact),
                  hgfm::HypothesisError);
  // c-condition violation.
  try {
    hgfm::verify_reflection(
        RParams{Rational(-1), Rational(1, 3), Rational(0), ConeParameter::real_symmetric()}, 2,
        {probe}, Backend::exact);
    FAIL("expected HypothesisError");
  } catch (const hgfm::HypothesisError& e) {
    CHECK(e.condition == "c-admissible");
  }
  // cab-condition violation (b = 1 pushes -a-b+c into N at m = 1).
  try {
    hgfm::verify_reflection(
        RParams{Rational(-1), Rational(1), Rational(1), ConeParameter::real_symmetric()}, 1,
        {RSpec({Rational(1, 4)})}, Backend::exact);
    FAIL("expected HypothesisError");
  } catch (const hgfm::HypothesisError& e) {
    CHECK(e.condition == "cab-admissible");
  }
  // Probes must live strictly inside (0,1).
  try {
    hgfm::verify_reflection(frozen_case(), 2, {RSpec({Rational(1, 4), Rational(1)})},
                            Backend::exact);
    FAIL("expected HypothesisError");
  } catch (const hgfm::HypothesisError& e) {
    CHECK(e.condition == "probe-domain");
  }
}

TEST_CASE("summation at the identity matrix") {
  // Exact reference value at m = 2, d = 1/2.
  const auto rep = hgfm::verify_gauss_at_identity(frozen_case(), 2, Backend::exact);
  CHECK(rep.pass);
  REQUIRE(rep.probes.size() == 1);
  CHECK(rep.probes[0].lhs == "104/135");
  CHECK(rep.probes[0].rhs == "104/135");
  CHECK(rep.probes[0].note.empty());

  // Hermitian case, m = 3: both sides equal 14157/25600.
  const RParams p3{Rational(-2), Rational(1, 2), Rational(6), ConeParameter::hermitian()};
  const auto rep3 = hgfm::verify_gauss_at_identity(p3, 3, Backend::exact);
  CHECK(rep3.pass);
  CHECK(rep3.probes.at(0).lhs == "14157/25600");

  // Floating agrees.
  const auto repf = hgfm::verify_gauss_at_identity(p3, 3, Backend::floating, 1e-12);
  CHECK(repf.pass);

  // Away from d in {1/2, 1} the check still passes but is flagged as an
  // empirical extension.
  const RParams pd{Rational(-2), Rational(1, 2), Rational(6), ConeParameter{Rational(3, 4)}};
  const auto repd = hgfm::verify_gauss_at_identity(pd, 3, Backend::exact);
  CHECK(repd.pass);
  CHECK_FALSE(repd.probes.at(0).note.empty());

  // Hypotheses: termination and c - a - b > (m-1) d.
  CHECK_THROWS_AS(hgfm::verify_gauss_at_identity(
                      RParams{Rational(1, 3), Rational(1, 5), Rational(3),
                              ConeParameter::real_symmetric()},
                      2, Backend::exact),
                  hgfm::HypothesisError);
  // c - a - b = 2 exactly equals (m-1) d = 2: not strictly above the line.
  try {
    hgfm::verify_gauss_at_identity(
        RParams{Rational(-1), Rational(3, 2), Rational(5, 2), ConeParameter::hermitian()}, 3,
        Backend::exact);
    FAIL("expected HypothesisError");
  } catch (const hgfm::HypothesisError& e) {
    CHECK(e.condition == "c-a-b");
  }
}

TEST_CASE("Muirhead system membership") {
  const DParams p{0.7, 0.9, 2.3, ConeParameter::real_symmetric()};
  const DSpec X({0.32, 0.11});

  // Residuals are small against the |abF| scale at h = 1e-3.
  for (int i = 0; i < 2; ++i) {
    const auto r = hgfm::muirhead_residual(p, X, i, 1e-3);
    CHECK(r.scale > 0);
    CHECK(std::fabs(r.residual) / r.scale <= 1e-5);
  }
  // Halving the step divides the residual by about four.
  const auto rh = hgfm::muirhead_residual(p, X, 0, 1e-2);
  const auto rh2 = hgfm::muirhead_residual(p, X, 0, 5e-3);
  const double ratio = std::fabs(rh.residual) / std::fabs(rh2.residual);
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);

  // The report covers every coordinate of every probe plus the halving check.
  const auto rep = hgfm::verify_muirhead(p, {X, DSpec({0.5, 0.22})}, 1e-3);
  CHECK(rep.pass);
  CHECK(rep.probes.size() == 2 * 2 + 1);

  // Coordinates closer than 10 h cannot be separated by central differences.
  CHECK_THROWS_AS(hgfm::muirhead_residual(p, DSpec({0.3, 0.3 + 1e-4}), 0, 1e-3),
                  hgfm::DomainError);
  // Terminating parameters admit probes outside the unit ball.
  const DParams pt{-2.0, 0.9, 2.3, ConeParameter::real_symmetric()};
  const auto big = hgfm::muirhead_residual(pt, DSpec({1.4, 0.3}), 0, 1e-3);
  CHECK(std::fabs(big.residual) / big.scale <= 1e-5);
}

TEST_CASE("2x2 Hermitian quadratic transformation") {
  const std::vector<std::array<double, 2>> probes{{0.2, -0.1}, {0.11, 0.07}, {-0.12, 0.31}};
  const auto rep = hgfm::verify_quadratic_2x2(0.7, 0.9, probes);
  CHECK(rep.pass);
  // Each probe yields a value record followed by a swap-symmetry record.
  CHECK(rep.probes.size() == 2 * probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    CHECK(rep.probes[2 * i].rel_residual <= 1e-10);
    // Each probe documents how far off the published form is: O(1), not noise.
    const auto& note = rep.probes[2 * i].note;
    const auto pos = note.find("published form residual ");
    REQUIRE(pos != std::string::npos);
    const double printed = std::stod(note.substr(pos + 24));
    CHECK(printed > 1e-3);
    CHECK(rep.probes[2 * i + 1].desc.rfind("swap-symmetry", 0) == 0);
  }
  // Another parameter pair.
  CHECK(hgfm::verify_quadratic_2x2(1.1, 1.3, probes).pass);
  // beta = 0 puts 2 beta at a pole of the scalar factors.
  CHECK_THROWS_AS(hgfm::verify_quadratic_2x2(0.7, 0.0, probes), hgfm::PoleError);
  // |x| >= 1 violates the probe domain.
  CHECK_THROWS_AS(hgfm::verify_quadratic_2x2(0.7, 0.9, {{1.0, 0.2}}), hgfm::HypothesisError);
}

TEST_CASE("scalar identity harness") {
  using SI = hgfm::ScalarIdentity;
  const auto refl = hgfm::verify_scalar_identity(SI::reflection, {12, 1});
  CHECK(refl.pass);
  CHECK(refl.backend == "exact");
  CHECK(refl.max_rel_residual() == 0.0);
  CHECK(refl.probes.size() == 12);

  const auto quad = hgfm::verify_scalar_identity(SI::quadratic, {8, 1});
  CHECK(quad.pass);
  CHECK(quad.max_rel_residual() <= 1e-11);

  const auto hann = hgfm::verify_scalar_identity(SI::hannah, {10, 1});
  CHECK(hann.pass);
  CHECK(hann.backend == "exact");

  const auto ratio = hgfm::verify_scalar_identity(SI::ratio_constancy, {8, 1});
  CHECK(ratio.pass);
  // The integer-b companion row is recorded but marked out of scope.
  bool saw_reference_row = false;
  for (const auto& rec : ratio.probes)
    if (rec.desc.rfind("recorded-only", 0) == 0) saw_reference_row = true;
  CHECK(saw_reference_row);
}

TEST_CASE("report serialization") {
  auto rep = hgfm::verify_gauss_at_identity(frozen_case(), 2, Backend::exact);
  const auto j = nlohmann::json::parse(rep.to_json_string());
  CHECK(j.at("schema").get<int>() == 1);
  CHECK(j.at("identity").get<std::string>() == rep.identity);
  CHECK(j.at("pass").get<bool>());
  CHECK(j.at("probes").size() == rep.probes.size());
  CHECK(j.at("probes")[0].at("lhs").get<std::string>() == "104/135");
  // CSV: one header plus one line per probe.
  const std::string csv = rep.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rep.probes.size()) + 1);
  // Text mentions the identity and the verdict.
  const std::string text = rep.to_text();
  CHECK(text.find(rep.identity) != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);

  // finalize() recomputes pass: flipping a probe breaks it.
  rep.probes[0].pass = false;
  rep.finalize();
  CHECK_FALSE(rep.pass);
}
