#include <doctest.h>

#include "hgfm/matrix_hgf.hpp"
#include "hgfm/scalar_hgf.hpp"

#include <cmath>

using hgfm::ConeParameter;
using hgfm::Rational;
using RSpec = hgfm::EigenSpectrum<hgfm::Rational>;
using DSpec = hgfm::EigenSpectrum<double>;
using RParams = hgfm::HgfParams<hgfm::Rational>;
using DParams = hgfm::HgfParams<double>;

namespace {
const hgfm::Truncation kTight{200, 1e-15, 8};
}

TEST_CASE("m = 1 collapses to the scalar series, shell for shell") {
  // At m = 1 the only partition of weight k is (k) and C_(k)(x) = x^k, so the
  // matrix series must reproduce the classical one regardless of d.
  for (const Rational& d : {Rational(1, 2), Rational(1), Rational(7, 3)}) {
    const RParams p{Rational(-3), Rational(2, 5), Rational(11, 4), ConeParameter{d}};
    const Rational x(3, 8);
    const auto shells = hgfm::shell_values(p, RSpec({x}), static_cast<const RSpec*>(nullptr), 5);
    REQUIRE(shells.size() == 6);
    Rational coeff(1), total(0);
    for (int k = 0; k <= 5; ++k) {
      CHECK(shells[static_cast<std::size_t>(k)] == coeff * hgfm::pow_int(x, k));
      total += shells[static_cast<std::size_t>(k)];
      coeff *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1));
    }
    const auto scalar = hgfm::gauss_2f1<Rational>({p.a, p.b, p.c}, x);
    CHECK(hgfm::evaluate(p, RSpec({x})).value == scalar.value);
    CHECK(total == scalar.value);
  }
}

TEST_CASE("frozen exact value at m = 2") {
  // 2F1(-1, 1/3; 3; diag(1/4, 1/2)) at d = 1/2 terminates at weight 2:
  // 1 - (1/9)(3/4) - 1/1080 = 989/1080, with the last shell carried by (1,1).
  const RParams p{Rational(-1), Rational(1, 3), Rational(3), ConeParameter::real_symmetric()};
  const RSpec X({Rational(1, 4), Rational(1, 2)});
  const auto r = hgfm::evaluate(p, X);
  CHECK(r.value == Rational(989, 1080));
  CHECK(r.terminated);
  CHECK(r.backend == hgfm::Backend::exact);
  CHECK(r.max_weight_used <= 2);
}

TEST_CASE("termination bound") {
  CHECK(hgfm::termination_bound(Rational(-3), Rational(1, 2), 4) == 12);
  CHECK(hgfm::termination_bound(Rational(1, 2), Rational(-2), 3) == 6);
  CHECK(hgfm::termination_bound(Rational(-5), Rational(-1), 3) == 3);
  CHECK_FALSE(hgfm::termination_bound(Rational(1, 2), Rational(1, 3), 3).has_value());
  CHECK(hgfm::termination_bound(-2.0, 0.5, 2) == 4);
  // The evaluation never sums past the bound.
  const RParams p{Rational(-2), Rational(1, 3), Rational(4), ConeParameter::hermitian()};
  const auto r = hgfm::evaluate(p, RSpec({Rational(1, 3), Rational(1, 5), Rational(1, 7)}));
  CHECK(r.max_weight_used <= 6);
  CHECK(r.terminated);
}

TEST_CASE("binomial factorization when b = c") {
  // 2F1(a, b; b; X) = prod_i (1 - x_i)^{-a}: exact for terminating a.
  const RSpec X({Rational(1, 4), Rational(2, 5)});
  const RParams p{Rational(-2), Rational(9, 7), Rational(9, 7), ConeParameter::real_symmetric()};
  const Rational want = hgfm::pow_int(Rational(1 - X.values[0]), 2) * hgfm::pow_int(Rational(1 - X.values[1]), 2);
  CHECK(hgfm::evaluate(p, X).value == want);
  // Floating, non-terminating, both classical cone parameters.
  for (const Rational& d : {Rational(1, 2), Rational(1)}) {
    const DParams q{0.6, 1.3, 1.3, ConeParameter{d}};
    const DSpec Xd({0.22, 0.41, 0.13});
    double want_d = 1.0;
    for (double xi : Xd.values) want_d *= std::pow(1.0 - xi, -0.6);
    CHECK(hgfm::evaluate(q, Xd, kTight).value == doctest::Approx(want_d).epsilon(1e-12));
  }
}

TEST_CASE("two-argument series") {
  const ConeParameter half = ConeParameter::real_symmetric();
  const RParams p{Rational(-2), Rational(2, 3), Rational(7, 2), half};
  const RSpec X({Rational(1, 4), Rational(1, 6)});
  // Y = I_m reduces to the one-argument function.
  const RSpec I2({Rational(1), Rational(1)});
  CHECK(hgfm::evaluate_two(p, X, I2).value == hgfm::evaluate(p, X).value);
  // Symmetric in X <-> Y.
  const RSpec Y({Rational(3, 5), Rational(1, 9)});
  CHECK(hgfm::evaluate_two(p, X, Y).value == hgfm::evaluate_two(p, Y, X).value);
  // m = 1: the kernel collapses to the scalar series at x*y.
  const RParams p1{Rational(-3), Rational(2, 3), Rational(7, 2), half};
  const Rational x(2, 5), y(3, 7);
  CHECK(hgfm::evaluate_two(p1, RSpec({x}), RSpec({y})).value ==
        hgfm::gauss_2f1<Rational>({p1.a, p1.b, p1.c}, x * y).value);
  // Mismatched sizes are rejected.
  CHECK_THROWS_AS(hgfm::evaluate_two(p, X, RSpec({Rational(1, 2)})), hgfm::ShapeError);
}

TEST_CASE("pole taxonomy for the partitional factor in c") {
  const ConeParameter half = ConeParameter::real_symmetric();
  const RSpec X({Rational(1, 4), Rational(1, 2)});
  // Terminating n = 1 with c = -2: (c - (j-1)d)_1 != 0 at every j, so legal.
  const RParams ok{Rational(-1), Rational(1, 3), Rational(-2), half};
  CHECK_NOTHROW(hgfm::evaluate(ok, X));
  // c = 0 dies immediately at j = 1.
  try {
    hgfm::evaluate(RParams{Rational(-1), Rational(1, 3), Rational(0), half}, X);
    FAIL("expected PoleError");
  } catch (const hgfm::PoleError& e) {
    CHECK(e.position == 1);
  }
  // Terminating n = 3 with c = -2 reaches (c)_k = 0 at k = 3.
  CHECK_THROWS_AS(hgfm::evaluate(RParams{Rational(-3), Rational(1, 3), Rational(-2), half}, X),
                  hgfm::PoleError);
  // Non-terminating floating case: c = 1/2, d = 1/2 puts c - d = 0 at j = 2.
  try {
    hgfm::evaluate(DParams{0.4, 0.7, 0.5, half}, DSpec({0.2, 0.3}), kTight);
    FAIL("expected PoleError");
  } catch (const hgfm::PoleError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("domain guards") {
  const ConeParameter half = ConeParameter::real_symmetric();
  // Exact non-terminating evaluation is refused.
  CHECK_THROWS_AS(hgfm::evaluate(RParams{Rational(1, 2), Rational(1, 3), Rational(3), half},
                                 RSpec({Rational(1, 4)})),
                  hgfm::DomainError);
  // Non-terminating floating series needs max |x_i| < 1...
  CHECK_THROWS_AS(hgfm::evaluate(DParams{0.5, 0.3, 2.0, half}, DSpec({0.5, 1.0}), kTight),
                  hgfm::DomainError);
  // ...and the two-argument variant needs norm(X) * norm(Y) < 1.
  CHECK_THROWS_AS(hgfm::evaluate_two(DParams{0.5, 0.3, 2.0, half}, DSpec({0.9, 0.2}),
                                     DSpec({1.2, 0.1}), kTight),
                  hgfm::DomainError);
  CHECK_NOTHROW(hgfm::evaluate_two(DParams{0.5, 0.3, 2.0, half}, DSpec({0.9, 0.2}),
                                   DSpec({0.8, 0.1}), kTight));
  // Terminating series are entire: spectra beyond the unit disk are fine.
  const auto r = hgfm::evaluate(RParams{Rational(-2), Rational(1, 3), Rational(3), half},
                                RSpec({Rational(5, 2), Rational(7, 3)}));
  CHECK(r.terminated);
  // Boundary warning for norms in [0.95, 1).
  const auto warn = hgfm::evaluate(DParams{0.5, 0.3, 2.0, half}, DSpec({0.96}),
                                   hgfm::Truncation{2000, 1e-13, 8});
  CHECK(warn.boundary_warning);
}

TEST_CASE("floating matches exact on terminating cases") {
  const RParams p{Rational(-3), Rational(2, 5), Rational(13, 4), ConeParameter{Rational(3, 4)}};
  const RSpec X({Rational(1, 3), Rational(2, 7), Rational(1, 8)});
  const Rational exact = hgfm::evaluate(p, X).value;
  const DParams q{-3.0, 0.4, 3.25, ConeParameter{Rational(3, 4)}};
  DSpec Xd;
  for (const auto& v : X.values) Xd.values.push_back(hgfm::to_double(v));
  const double approx = hgfm::evaluate(q, Xd).value;
  CHECK(approx == doctest::Approx(hgfm::to_double(exact)).epsilon(1e-13));
}

TEST_CASE("non-terminating truncation converges and reports metadata") {
  const DParams p{0.5, 0.7, 2.1, ConeParameter::hermitian()};
  const DSpec X({0.3, 0.15});
  const auto r = hgfm::evaluate(p, X, kTight);
  CHECK_FALSE(r.terminated);
  CHECK(r.max_weight_used >= 8);
  CHECK(r.last_shell_magnitude <= 1e-13);
  // Loosening the cutoff moves the value by less than its own tolerance.
  const auto r2 = hgfm::evaluate(p, X, hgfm::Truncation{200, 1e-9, 8});
  CHECK(std::fabs(r.value - r2.value) <= 1e-8 * std::fabs(r.value));
  // Against an independent full shell sum at higher weight.
  const auto shells = hgfm::shell_values(p, X, static_cast<const DSpec*>(nullptr), 45);
  double total = 0;
  for (double s : shells) total += s;
  CHECK(r.value == doctest::Approx(total).epsilon(1e-12));
}
