#include <doctest.h>

#include "hgfm/scalar_hgf.hpp"

#include <cmath>

using hgfm::Rational;
using RParams = hgfm::ScalarHgfParams<hgfm::Rational>;
using DParams = hgfm::ScalarHgfParams<double>;

namespace {
constexpr double kPi = 3.14159265358979323846;
const hgfm::Truncation kTight{2000, 1e-15, 8};
}  // namespace

TEST_CASE("terminating series against hand expansions") {
  // 2F1(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2 / (c(c+1)).
  const Rational b(1, 3), c(5, 2), x(3, 7);
  const auto r = hgfm::gauss_2f1<Rational>({Rational(-2), b, c}, x);
  const Rational want = 1 - 2 * b * x / c + b * (b + 1) * x * x / (c * (c + 1));
  CHECK(r.value == want);
  CHECK(r.terminated);
  CHECK(r.backend == hgfm::Backend::exact);
  CHECK(r.max_weight_used == 2);

  // a = 0 short-circuits to 1.
  const auto r0 = hgfm::gauss_2f1<Rational>({Rational(0), b, c}, x);
  CHECK(r0.value == Rational(1));
  CHECK(r0.terminated);
  CHECK(r0.max_weight_used == 0);

  // Termination also triggers on b, and on whichever index is smaller.
  const auto rb = hgfm::gauss_2f1<Rational>({b, Rational(-1), c}, x);
  CHECK(rb.value == 1 + b * Rational(-1) / c * x);
  const auto rmin = hgfm::gauss_2f1<Rational>({Rational(-1), Rational(-4), c}, x);
  CHECK(rmin.max_weight_used == 1);
}

TEST_CASE("log series: 2F1(1,1;2;x) = -log(1-x)/x") {
  for (double x : {0.5, -0.7, 0.31, 0.9}) {
    const auto r = hgfm::gauss_2f1<double>({1.0, 1.0, 2.0}, x, kTight);
    CHECK(r.value == doctest::Approx(-std::log1p(-x) / x).epsilon(1e-13));
    CHECK_FALSE(r.terminated);
    CHECK(r.backend == hgfm::Backend::floating);
  }
}

TEST_CASE("binomial collapse when b equals c") {
  // The b = c case reduces to the binomial series (1-x)^{-a}.
  for (double a : {0.7, -1.3, 2.2}) {
    for (double x : {0.4, -0.55}) {
      const auto r = hgfm::gauss_2f1<double>({a, 1.9, 1.9}, x, kTight);
      CHECK(r.value == doctest::Approx(std::pow(1.0 - x, -a)).epsilon(1e-13));
    }
  }
  // Exact flavor through a terminating exponent.
  const Rational x(2, 9);
  const auto r = hgfm::gauss_2f1<Rational>({Rational(-2), Rational(7, 5), Rational(7, 5)}, x);
  CHECK(r.value == (1 - x) * (1 - x));
}

TEST_CASE("value at 1: Chu-Vandermonde and the Gauss quotient") {
  // Terminating, exact: (c-b)_n / (c)_n with a = -2, b = 1/3, c = 3.
  const Rational got = hgfm::gauss_2f1_at_1<Rational>({Rational(-2), Rational(1, 3), Rational(3)});
  CHECK(got == Rational(22, 27));
  // The terminating sum itself agrees at x = 1 (finite, so x = 1 is legal).
  const auto direct = hgfm::gauss_2f1<Rational>({Rational(-2), Rational(1, 3), Rational(3)},
                                                Rational(1));
  CHECK(direct.value == Rational(22, 27));
  // Swapped roles of a and b.
  CHECK(hgfm::gauss_2f1_at_1<Rational>({Rational(1, 3), Rational(-2), Rational(3)}) ==
        Rational(22, 27));
  // Non-terminating floating branch: 2F1(1/2, 1/2; 2; 1) = 4 / pi.
  CHECK(hgfm::gauss_2f1_at_1<double>({0.5, 0.5, 2.0}) ==
        doctest::Approx(4.0 / kPi).epsilon(1e-12));
  // Divergent when c - a - b <= 0; exact backend refuses non-terminating.
  CHECK_THROWS_AS(hgfm::gauss_2f1_at_1<double>({0.8, 0.9, 1.2}), hgfm::DomainError);
  CHECK_THROWS_AS(hgfm::gauss_2f1_at_1<Rational>({Rational(1, 2), Rational(1, 2), Rational(3)}),
                  hgfm::DomainError);
}

TEST_CASE("derivatives: contiguous shift formula vs central differences") {
  const DParams p{0.7, 1.4, 2.3};
  const double x = 0.35, h = 1e-5;
  auto f = [&](double t) { return hgfm::gauss_2f1<double>(p, t, kTight).value; };
  const double fd1 = (f(x + h) - f(x - h)) / (2 * h);
  CHECK(hgfm::gauss_2f1_derivative(p, x, 1, kTight) == doctest::Approx(fd1).epsilon(1e-8));
  const double fd2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
  CHECK(hgfm::gauss_2f1_derivative(p, x, 2, kTight) == doctest::Approx(fd2).epsilon(1e-5));
  CHECK(hgfm::d2f1_dx(p, x, kTight) == doctest::Approx(fd1).epsilon(1e-8));
  // Order zero is the function itself.
  CHECK(hgfm::gauss_2f1_derivative(p, x, 0, kTight) == doctest::Approx(f(x)).epsilon(1e-14));

  // Exact second derivative of the a = -2 polynomial: 2 b (b+1) / (c (c+1)).
  const Rational b(1, 3), c(5, 2);
  CHECK(hgfm::gauss_2f1_derivative<Rational>({Rational(-2), b, c}, Rational(1, 4), 2) ==
        2 * b * (b + 1) / (c * (c + 1)));
  // Beyond the polynomial degree the derivative vanishes via (a)_s = 0.
  CHECK(hgfm::gauss_2f1_derivative<Rational>({Rational(-2), b, c}, Rational(1, 4), 3) ==
        Rational(0));
  CHECK_THROWS_AS(hgfm::gauss_2f1_derivative(p, x, -1, kTight), hgfm::DomainError);
}

TEST_CASE("pole handling in c") {
  // Non-terminating with c a nonpositive integer: always a pole.
  CHECK_THROWS_AS(hgfm::gauss_2f1<double>({0.5, 0.7, -1.0}, 0.3, kTight), hgfm::PoleError);
  // Terminating with n = 2 and c = -1: (c)_2 = 0 inside the range.
  CHECK_THROWS_AS(hgfm::gauss_2f1<Rational>({Rational(-2), Rational(1, 3), Rational(-1)},
                                            Rational(1, 4)),
                  hgfm::PoleError);
  // Terminating with n = 1 and c = -1: the vanishing factor sits beyond the
  // last contributing term, so the value is legal.
  const auto ok = hgfm::gauss_2f1<Rational>({Rational(-1), Rational(1, 3), Rational(-1)},
                                            Rational(1, 4));
  CHECK(ok.value == 1 + Rational(1, 3) * Rational(1, 4) / Rational(-1) * Rational(-1));
  // gauss_2f1_at_1 rejects the in-range pole too.
  CHECK_THROWS_AS((hgfm::gauss_2f1_at_1<Rational>({Rational(-2), Rational(1, 3), Rational(-1)})),
                  hgfm::PoleError);
}

TEST_CASE("domain guards and truncation metadata") {
  // Exact non-terminating evaluation is refused.
  CHECK_THROWS_AS(hgfm::gauss_2f1<Rational>({Rational(1, 2), Rational(1, 3), Rational(3)},
                                            Rational(1, 4)),
                  hgfm::DomainError);
  // |x| >= 1 is outside the disk for non-terminating series.
  CHECK_THROWS_AS(hgfm::gauss_2f1<double>({0.5, 0.3, 2.0}, 1.0, kTight), hgfm::DomainError);
  CHECK_THROWS_AS(hgfm::gauss_2f1<double>({0.5, 0.3, 2.0}, -1.2, kTight), hgfm::DomainError);
  // Near the boundary the result carries a warning flag.
  const auto warn = hgfm::gauss_2f1<double>({0.5, 0.3, 2.0}, 0.96, hgfm::Truncation{6000, 1e-14, 8});
  CHECK(warn.boundary_warning);
  const auto quiet = hgfm::gauss_2f1<double>({0.5, 0.3, 2.0}, 0.5, kTight);
  CHECK_FALSE(quiet.boundary_warning);
  CHECK(quiet.max_weight_used > 8);
  CHECK(quiet.last_shell_magnitude <= 1e-13);
  // Hitting max_weight returns the partial sum with terminated = false.
  const auto capped = hgfm::gauss_2f1<double>({0.5, 0.3, 2.0}, 0.9, hgfm::Truncation{5, 1e-15, 3});
  CHECK_FALSE(capped.terminated);
  CHECK(capped.max_weight_used == 5);
}
