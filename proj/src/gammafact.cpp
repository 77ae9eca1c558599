#include "hgfm/gammafact.hpp"

#include <cmath>
#include <numbers>

namespace hgfm {

namespace {

// Nonpositive-integer detection for floating gamma arguments. The tolerance
// absorbs decimal-parse rounding of inputs like a - (j-1)*d.
bool at_gamma_pole(double x) {
  if (x > 0.5) return false;
  double r = std::nearbyint(x);
  return r <= 0.0 && std::fabs(x - r) <= 1e-12;
}

}  // namespace

SignedLog signed_lgamma(double x) {
  if (at_gamma_pole(x)) return {0.0, 0};
  SignedLog out;
  out.log_abs = std::lgamma(x);
  // Gamma is positive on (0, inf); on (-k-1, -k) its sign alternates,
  // negative first on (-1, 0).
  if (x > 0) {
    out.sign = 1;
  } else {
    long k = static_cast<long>(std::floor(-x));  // x in (-k-1, -k)
    out.sign = (k % 2 == 0) ? -1 : 1;
  }
  return out;
}

double multivariate_gamma(double a, int m, const ConeParameter& cone) {
  SignedLog l = log_multivariate_gamma(a, m, cone);
  return l.sign * std::exp(l.log_abs);
}

SignedLog log_multivariate_gamma(double a, int m, const ConeParameter& cone) {
  if (m < 1) throw ShapeError("multivariate gamma needs m >= 1");
  const double d = cone.d_double();
  SignedLog out;
  out.log_abs = 0.5 * m * (m - 1) * d * std::log(std::numbers::pi);
  out.sign = 1;
  for (int j = 1; j <= m; ++j) {
    const double arg = a - (j - 1) * d;
    SignedLog lg = signed_lgamma(arg);
    if (lg.sign == 0)
      throw PoleError("multivariate gamma pole: a-(j-1)d is a nonpositive integer at j=" +
                          std::to_string(j),
                      j);
    out.log_abs += lg.log_abs;
    out.sign *= lg.sign;
  }
  return out;
}

namespace detail {

double gauss_ratio_gamma(double a, double b, double c, const ConeParameter& cone, int m) {
  const double d = cone.d_double();
  double log_abs = 0.0;
  int sign = 1;
  for (int j = 1; j <= m; ++j) {
    const double shift = (j - 1) * d;
    const double args[4] = {c - shift, c - a - b - shift, c - a - shift, c - b - shift};
    for (int t = 0; t < 4; ++t) {
      SignedLog lg = signed_lgamma(args[t]);
      if (lg.sign == 0)
        throw PoleError("gauss ratio: gamma factor at a pole (j=" + std::to_string(j) + ")", j);
      if (t < 2) {
        log_abs += lg.log_abs;
      } else {
        log_abs -= lg.log_abs;
      }
      sign *= lg.sign;
    }
  }
  return sign * std::exp(log_abs);
}

}  // namespace detail

}  // namespace hgfm
