#pragma once

#include "hgfm/errors.hpp"
#include "hgfm/gammafact.hpp"
#include "hgfm/rational.hpp"
#include "hgfm/types.hpp"

#include <optional>
#include <string>

namespace hgfm {

template <class T>
struct ScalarHgfParams {
  T a, b, c;
};

namespace detail {

/// Index n of the first vanishing numerator factor: the series terminates
/// with top term k = n when a = -n or b = -n (smallest such n wins).
template <class T>
std::optional<int> scalar_termination_index(const T& a, const T& b) {
  auto na = nonpositive_integer(a);
  auto nb = nonpositive_integer(b);
  if (na && nb) return std::min(*na, *nb);
  if (na) return na;
  return nb;
}

/// PoleError when (c)_k vanishes for some contributing k <= top (or any k
/// when the series does not terminate).
template <class T>
void check_scalar_pole(const T& c, const std::optional<int>& top) {
  if (auto q = nonpositive_integer(c)) {
    if (!top || *q <= *top - 1)
      throw PoleError("scalar 2F1: c is a nonpositive integer inside the series range", 1);
  }
}

}  // namespace detail

/// The Gauss series 2F1(a, b; c; x) = sum_k (a)_k (b)_k / ((c)_k k!) x^k.
///
/// Terminating (a or b a nonpositive integer): the finite sum is returned
/// with terminated = true; it is exact for the Rational backend. Otherwise
/// the floating backend sums until two consecutive terms drop below
/// rel_tol * |partial sum| (truncation policy), and the exact backend
/// throws DomainError. |x| < 1 is required in the non-terminating case.
template <class T>
SeriesResult<T> gauss_2f1(const ScalarHgfParams<T>& p, const T& x, const Truncation& tr = {}) {
  const auto top = detail::scalar_termination_index(p.a, p.b);
  detail::check_scalar_pole(p.c, top);

  SeriesResult<T> out;
  out.backend = scalar_traits<T>::is_exact ? Backend::exact : Backend::floating;

  if (!top) {
    if constexpr (scalar_traits<T>::is_exact)
      throw DomainError("exact scalar 2F1 requires a terminating series (a or b in Z_{<=0})");
    if (!(scalar_traits<T>::abs(x) < scalar_traits<T>::from_int(1)))
      throw DomainError("scalar 2F1 series requires |x| < 1 when non-terminating");
    out.boundary_warning = std::fabs(hgfm::to_double(x)) >= 0.95;
  }

  T sum = scalar_traits<T>::from_int(1);
  T term = scalar_traits<T>::from_int(1);
  out.max_weight_used = 0;
  out.last_shell_magnitude = 1.0;
  if (top && *top == 0) {
    out.value = sum;
    out.terminated = true;
    return out;
  }

  double prev_mag = 1.0;
  for (int k = 0;; ++k) {
    if (top && k == *top) {
      out.value = sum;
      out.terminated = true;
      return out;
    }
    if (!top && k == tr.max_weight) {
      out.value = sum;
      out.terminated = false;
      return out;
    }
    const T kT = scalar_traits<T>::from_int(k);
    const T den = (p.c + kT) * scalar_traits<T>::from_int(k + 1);
    if (den == scalar_traits<T>::from_int(0))
      throw PoleError("scalar 2F1: (c)_k vanished mid-series", 1);
    term *= (p.a + kT) * (p.b + kT) / den * x;
    sum += term;
    out.max_weight_used = k + 1;
    const double mag = std::fabs(hgfm::to_double(term));
    if (mag != 0.0) out.last_shell_magnitude = mag;

    if (!top && k + 1 >= tr.min_weight) {
      const double scale = std::fabs(hgfm::to_double(sum));
      if (mag <= tr.rel_tol * scale && prev_mag <= tr.rel_tol * scale) {
        out.value = sum;
        out.terminated = false;
        return out;
      }
    }
    prev_mag = mag;
  }
}

/// 2F1(a, b; c; 1). Terminating branch: the Chu-Vandermonde value
/// (c-b)_n / (c)_n for a = -n (resp. with a, b swapped). Non-terminating
/// (floating only): the Gauss value Gamma(c) Gamma(c-a-b) /
/// (Gamma(c-a) Gamma(c-b)), which needs c - a - b > 0.
template <class T>
T gauss_2f1_at_1(const ScalarHgfParams<T>& p) {
  auto eval_poch = [&](int n, const T& other) {
    const T den = rising_factorial(p.c, n);
    if (den == scalar_traits<T>::from_int(0))
      throw PoleError("2F1 at 1: (c)_n vanishes in the terminating branch", 1);
    return rising_factorial(T(p.c - other), n) / den;
  };
  if (auto n = nonpositive_integer(p.a)) return eval_poch(*n, p.b);
  if (auto n = nonpositive_integer(p.b)) return eval_poch(*n, p.a);
  if constexpr (scalar_traits<T>::is_exact) {
    throw DomainError("exact 2F1 at 1 requires a terminating parameter");
  } else {
    if (!(p.c - p.a - p.b > 0))
      throw DomainError("2F1 at 1 diverges unless c - a - b > 0");
    SignedLog l1 = signed_lgamma(p.c), l2 = signed_lgamma(p.c - p.a - p.b),
              l3 = signed_lgamma(p.c - p.a), l4 = signed_lgamma(p.c - p.b);
    if (l1.sign == 0 || l2.sign == 0)
      throw PoleError("2F1 at 1: gamma factor at a pole", 1);
    if (l3.sign == 0 || l4.sign == 0) return 0.0;  // denominator pole: the ratio vanishes
    return l1.sign * l2.sign * l3.sign * l4.sign *
           std::exp(l1.log_abs + l2.log_abs - l3.log_abs - l4.log_abs);
  }
}

/// order-th derivative of 2F1 at x:
///   d^s/dx^s 2F1(a,b;c;x) = ((a)_s (b)_s / (c)_s) 2F1(a+s, b+s; c+s; x).
template <class T>
T gauss_2f1_derivative(const ScalarHgfParams<T>& p, const T& x, int order,
                       const Truncation& tr = {}) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  const T den = rising_factorial(p.c, order);
  if (den == scalar_traits<T>::from_int(0))
    throw PoleError("2F1 derivative: (c)_s vanishes", 1);
  const T factor = rising_factorial(p.a, order) * rising_factorial(p.b, order) / den;
  if (factor == scalar_traits<T>::from_int(0)) return scalar_traits<T>::from_int(0);
  const T sT = scalar_traits<T>::from_int(order);
  ScalarHgfParams<T> q{p.a + sT, p.b + sT, p.c + sT};
  return factor * gauss_2f1(q, x, tr).value;
}

template <class T>
T d2f1_dx(const ScalarHgfParams<T>& p, const T& x, const Truncation& tr = {}) {
  return gauss_2f1_derivative(p, x, 1, tr);
}

}  // namespace hgfm
