#pragma once

#include "hgfm/errors.hpp"
#include "hgfm/partition.hpp"
#include "hgfm/rational.hpp"

#include <cmath>
#include <string>

namespace hgfm {

/// The cone parameter d that keys the whole family: d = 1/2 for real
/// symmetric matrices, d = 1 for Hermitian ones, arbitrary positive
/// rational otherwise. Stored exactly; the Jack parameter is alpha = 1/d.
class ConeParameter {
 public:
  explicit ConeParameter(Rational d) : d_(std::move(d)) {
    if (d_ <= 0) throw DomainError("cone parameter d must be positive");
    dd_ = hgfm::to_double(d_);
  }
  static ConeParameter real_symmetric() { return ConeParameter(Rational(1, 2)); }
  static ConeParameter hermitian() { return ConeParameter(Rational(1)); }

  const Rational& d() const { return d_; }
  double d_double() const { return dd_; }
  Rational alpha() const { return Rational(1) / d_; }

  bool operator==(const ConeParameter& o) const { return d_ == o.d_; }

 private:
  Rational d_;
  double dd_;
};

template <class T>
T cone_d(const ConeParameter& c) {
  if constexpr (scalar_traits<T>::is_exact)
    return c.d();
  else
    return c.d_double();
}

/// (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
template <class T>
T rising_factorial(const T& a, int k) {
  T out = scalar_traits<T>::from_int(1);
  T f = a;
  for (int i = 0; i < k; ++i) {
    out *= f;
    f += scalar_traits<T>::from_int(1);
  }
  return out;
}

/// Partitional rising factorial [a]_kappa = prod_j (a - (j-1) d)_{kappa_j}.
template <class T>
T partitional_rising_factorial(const T& a, const Partition& kappa, const ConeParameter& cone) {
  const T d = cone_d<T>(cone);
  T out = scalar_traits<T>::from_int(1);
  T base = a;
  for (int j = 0; j < kappa.length(); ++j) {
    out *= rising_factorial(base, kappa.part(j));
    base -= d;
  }
  return out;
}

/// log |Gamma(x)| together with the sign of Gamma(x); sign 0 flags a pole.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
};

SignedLog signed_lgamma(double x);

/// Multivariate gamma Gamma_m(a; d) = pi^{m(m-1)d/2} prod_j Gamma(a-(j-1)d).
/// Throws PoleError (with the offending 1-based j) when any factor sits at a
/// nonpositive-integer argument.
double multivariate_gamma(double a, int m, const ConeParameter& cone);

/// log |Gamma_m(a; d)| with sign, for overflow-safe ratios.
SignedLog log_multivariate_gamma(double a, int m, const ConeParameter& cone);

/// The Gauss ratio Gamma_m(c) Gamma_m(c-a-b) / (Gamma_m(c-a) Gamma_m(c-b)).
///
/// Terminating branch (a or b a nonpositive integer -n): evaluated as the
/// pole-free Pochhammer form prod_j (c-b-(j-1)d)_n / (c-(j-1)d)_n, valid for
/// both backends. Otherwise (floating only) via log-gamma differences with
/// sign tracking. Throws PoleError when neither branch is admissible and
/// DomainError when the exact backend is asked for a non-terminating ratio.
template <class T>
T gauss_ratio(const T& a, const T& b, const T& c, const ConeParameter& cone, int m);

namespace detail {

template <class T>
T gauss_ratio_pochhammer(int n, const T& other, const T& c, const ConeParameter& cone, int m) {
  const T d = cone_d<T>(cone);
  T num = scalar_traits<T>::from_int(1);
  T den = scalar_traits<T>::from_int(1);
  for (int j = 1; j <= m; ++j) {
    const T shift = scalar_traits<T>::from_int(j - 1) * d;
    const T den_j = rising_factorial(T(c - shift), n);
    if (den_j == scalar_traits<T>::from_int(0))
      throw PoleError("gauss ratio: (c-(j-1)d)_n vanishes at j=" + std::to_string(j), j);
    num *= rising_factorial(T(c - other - shift), n);
    den *= den_j;
  }
  return num / den;
}

double gauss_ratio_gamma(double a, double b, double c, const ConeParameter& cone, int m);

}  // namespace detail

template <class T>
T gauss_ratio(const T& a, const T& b, const T& c, const ConeParameter& cone, int m) {
  if (auto n = nonpositive_integer(a)) return detail::gauss_ratio_pochhammer(*n, b, c, cone, m);
  if (auto n = nonpositive_integer(b)) return detail::gauss_ratio_pochhammer(*n, a, c, cone, m);
  if constexpr (scalar_traits<T>::is_exact) {
    throw DomainError(
        "exact gauss ratio requires a terminating parameter (a or b a nonpositive integer)");
  } else {
    return detail::gauss_ratio_gamma(a, b, c, cone, m);
  }
}

}  // namespace hgfm
