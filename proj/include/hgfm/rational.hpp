#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace hgfm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

/// "p/q" when q != 1, plain integer otherwise. Lossless.
inline std::string to_fraction_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// Parses "p/q", integers, and decimal strings ("0.25", "-1.5e-3") into an
/// exact rational. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view s);

// Numeric shims shared by the templated series engines. The two backends
// are double (floating) and Rational (exact).
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static double from_int(long n) { return static_cast<double>(n); }
  static double abs(double x) { return std::fabs(x); }
  // Floating parameters arrive from decimal parsing and may sit a few ulp
  // off an integer; the tolerance keeps termination detection usable.
  static std::optional<long> integer_value(double x) {
    double r = std::nearbyint(x);
    if (std::fabs(x - r) <= 1e-12 && std::fabs(r) < 9.0e15) return static_cast<long>(r);
    return std::nullopt;
  }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static Rational from_int(long n) { return Rational(n); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static std::optional<long> integer_value(const Rational& x) {
    if (denominator(x) != 1) return std::nullopt;
    const BigInt& n = numerator(x);
    if (n < std::numeric_limits<long>::min() || n > std::numeric_limits<long>::max()) return std::nullopt;
    return n.convert_to<long>();
  }
};

/// n >= 0 such that x == -n, when x is a nonpositive integer.
template <class T>
std::optional<int> nonpositive_integer(const T& x) {
  auto v = scalar_traits<T>::integer_value(x);
  if (v && *v <= 0 && *v > -1000000) return static_cast<int>(-*v);
  return std::nullopt;
}

template <class T>
std::string format_scalar(const T& x) {
  if constexpr (scalar_traits<T>::is_exact)
    return to_fraction_string(x);
  else
    return format_double(x);
}

/// x^n by repeated squaring, n >= 0.
template <class T>
T pow_int(T x, int n) {
  T out = scalar_traits<T>::from_int(1);
  while (n > 0) {
    if (n & 1) out *= x;
    x *= x;
    n >>= 1;
  }
  return out;
}

}  // namespace hgfm
