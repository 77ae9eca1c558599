#include <doctest.h>

#include "hgfm/gammafact.hpp"
#include "hgfm/probes.hpp"

#include <cmath>

using hgfm::ConeParameter;
using hgfm::Rational;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("rising factorial") {
  CHECK(hgfm::rising_factorial(Rational(5, 2), 3) == Rational(315, 8));
  CHECK(hgfm::rising_factorial(Rational(-2), 2) == Rational(2));
  CHECK(hgfm::rising_factorial(Rational(-2), 3) == Rational(0));
  CHECK(hgfm::rising_factorial(Rational(7, 3), 0) == Rational(1));
  CHECK(hgfm::rising_factorial(2.0, 4) == doctest::Approx(120.0));
}

TEST_CASE("partitional rising factorial expands into shifted classical ones") {
  // [a]_(2,1) at d = 1/2 is (a)_2 (a - 1/2)_1 = a (a+1) (a - 1/2).
  const ConeParameter half = ConeParameter::real_symmetric();
  const hgfm::Partition k21({2, 1});
  for (const Rational& a : {Rational(3, 7), Rational(-5, 3), Rational(2)}) {
    const Rational want = a * (a + 1) * (a - Rational(1, 2));
    CHECK(hgfm::partitional_rising_factorial(a, k21, half) == want);
  }
  // Empty partition: the empty product.
  CHECK(hgfm::partitional_rising_factorial(Rational(9, 4), hgfm::Partition{}, half) ==
        Rational(1));
  // d = 1: [a]_(2,2) = (a)_2 (a-1)_2.
  const ConeParameter one = ConeParameter::hermitian();
  const Rational a(7, 5);
  CHECK(hgfm::partitional_rising_factorial(a, hgfm::Partition({2, 2}), one) ==
        a * (a + 1) * (a - 1) * a);
}

TEST_CASE("cone parameter") {
  CHECK(ConeParameter::real_symmetric().d() == Rational(1, 2));
  CHECK(ConeParameter::hermitian().d() == Rational(1));
  CHECK(ConeParameter::real_symmetric().alpha() == Rational(2));
  CHECK(ConeParameter(Rational(1, 4)).d_double() == doctest::Approx(0.25));
  CHECK_THROWS_AS(ConeParameter(Rational(0)), hgfm::DomainError);
  CHECK_THROWS_AS(ConeParameter(Rational(-1, 2)), hgfm::DomainError);
}

TEST_CASE("multivariate gamma: closed form at m=2, d=1/2") {
  // Gamma_2(3/2; 1/2) = pi^{1/2} Gamma(3/2) Gamma(1) = pi / 2.
  const double got = hgfm::multivariate_gamma(1.5, 2, ConeParameter::real_symmetric());
  CHECK(got == doctest::Approx(kPi / 2).epsilon(1e-12));
  // m = 1 reduces to the classical gamma.
  CHECK(hgfm::multivariate_gamma(4.0, 1, ConeParameter::hermitian()) ==
        doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("multivariate gamma pole reports the offending factor") {
  // Gamma_2(1/2; 1/2): a - (j-1)d = 0 at j = 2.
  try {
    hgfm::multivariate_gamma(0.5, 2, ConeParameter::real_symmetric());
    FAIL("expected PoleError");
  } catch (const hgfm::PoleError& e) {
    CHECK(e.position == 2);
  }
  try {
    hgfm::log_multivariate_gamma(0.0, 3, ConeParameter::hermitian());
    FAIL("expected PoleError");
  } catch (const hgfm::PoleError& e) {
    CHECK(e.position == 1);
  }
}

TEST_CASE("signed lgamma matches reflection values on the negative axis") {
  // Gamma(-1/2) = -2 sqrt(pi); Gamma(-3/2) = 4 sqrt(pi) / 3.
  const auto g1 = hgfm::signed_lgamma(-0.5);
  CHECK(g1.sign == -1);
  CHECK(std::exp(g1.log_abs) == doctest::Approx(2 * std::sqrt(kPi)).epsilon(1e-12));
  const auto g2 = hgfm::signed_lgamma(-1.5);
  CHECK(g2.sign == 1);
  CHECK(std::exp(g2.log_abs) == doctest::Approx(4 * std::sqrt(kPi) / 3).epsilon(1e-12));
  CHECK(hgfm::signed_lgamma(-3.0).sign == 0);  // pole
  CHECK(hgfm::signed_lgamma(2.5).sign == 1);
}

TEST_CASE("gauss ratio: terminating Pochhammer branch, exact") {
  // m=2, d=1/2, a=-1, b=1/3, c=3:
  // prod_j (c-b-(j-1)d)_1 / (c-(j-1)d)_1 = (8/3)/3 * (13/6)/(5/2) = 104/135.
  const Rational got = hgfm::gauss_ratio(Rational(-1), Rational(1, 3), Rational(3),
                                         ConeParameter::real_symmetric(), 2);
  CHECK(got == Rational(104, 135));
  // Symmetric in a and b when both terminate the same way.
  CHECK(hgfm::gauss_ratio(Rational(1, 3), Rational(-1), Rational(3),
                          ConeParameter::real_symmetric(), 2) == Rational(104, 135));
}

TEST_CASE("gauss ratio: Pochhammer and gamma branches agree in floating point") {
  // For terminating a = -n the gamma-quotient form must reproduce the
  // Pochhammer product wherever both are defined.
  const ConeParameter cones[] = {ConeParameter::real_symmetric(), ConeParameter::hermitian()};
  int checked = 0;
  for (const auto& cone : cones) {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 4; ++n) {
        for (double b : {0.31, 0.87}) {
          const double c = 5.25;  // keeps every gamma argument off the poles
          const double poch = hgfm::gauss_ratio(static_cast<double>(-n), b, c, cone, m);
          // Independent evaluation through the log-gamma products.
          double log_sum = 0.0;
          int sign = 1;
          const double d = cone.d_double();
          const double args[4][2] = {{c, 1}, {c + n - b, 1}, {c + n, -1}, {c - b, -1}};
          for (const auto& [base, s] : args) {
            for (int j = 1; j <= m; ++j) {
              const auto g = hgfm::signed_lgamma(base - (j - 1) * d);
              REQUIRE(g.sign != 0);
              log_sum += (s > 0 ? 1 : -1) * g.log_abs;
              if (g.sign < 0) sign = -sign;
            }
          }
          const double via_gamma = sign * std::exp(log_sum);
          CHECK(poch == doctest::Approx(via_gamma).epsilon(1e-10));
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 48);
}

TEST_CASE("gauss ratio: error taxonomy") {
  const ConeParameter half = ConeParameter::real_symmetric();
  // Exact non-terminating has no closed rational value.
  CHECK_THROWS_AS(hgfm::gauss_ratio(Rational(1, 3), Rational(1, 5), Rational(3), half, 2),
                  hgfm::DomainError);
  // Terminating but a denominator factor (c - (j-1)d)_n vanishes: c = 1/2,
  // n = 1, m = 2: j = 2 gives (c - d)_1 = 0.
  try {
    hgfm::gauss_ratio(Rational(-1), Rational(1, 3), Rational(1, 2), half, 2);
    FAIL("expected PoleError");
  } catch (const hgfm::PoleError& e) {
    CHECK(e.position == 2);
  }
}
