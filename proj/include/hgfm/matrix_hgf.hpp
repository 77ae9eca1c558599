#pragma once

#include "hgfm/errors.hpp"
#include "hgfm/gammafact.hpp"
#include "hgfm/jack.hpp"
#include "hgfm/partition.hpp"
#include "hgfm/rational.hpp"
#include "hgfm/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgfm {

// The Gaussian hypergeometric function of matrix argument,
//
//   2F1(a, b; c; X) = sum_{k>=0} (1/k!) sum_{|kappa|=k, l(kappa)<=m}
//                     [a]_kappa [b]_kappa / [c]_kappa * C_kappa(X; d),
//
// evaluated on the eigenvalue spectrum of X. The series terminates when a
// or b is a nonpositive integer -n (every kappa with kappa_1 > n is killed
// by the numerator, capping the total weight at n*m); otherwise it
// converges for max|x_i| < 1.

namespace detail {

template <class T>
std::optional<int> termination_index(const T& a, const T& b) {
  auto na = nonpositive_integer(a);
  auto nb = nonpositive_integer(b);
  if (na && nb) return std::min(*na, *nb);
  if (na) return na;
  return nb;
}

/// PoleError (reporting 1-based j) when [c]_kappa can vanish for a kappa the
/// series reaches: c - (j-1)d in {0, -1, ..., -(n-1)} for terminating index
/// n, or any nonpositive integer when non-terminating.
template <class T>
void check_partitional_poles(const T& c, const ConeParameter& cone, int m,
                             const std::optional<int>& n) {
  const T d = cone_d<T>(cone);
  for (int j = 1; j <= m; ++j) {
    const T v = c - scalar_traits<T>::from_int(j - 1) * d;
    if (auto q = nonpositive_integer(v)) {
      if (!n || *q <= *n - 1)
        throw PoleError("matrix 2F1: c - (j-1)d hits a pole of the series at j=" +
                            std::to_string(j),
                        j);
    }
  }
}

template <class T>
T max_abs(const EigenSpectrum<T>& X) {
  T n = scalar_traits<T>::from_int(0);
  for (const auto& v : X.values) n = std::max(n, scalar_traits<T>::abs(v));
  return n;
}

}  // namespace detail

/// Total-weight bound n * m when the series terminates (n the smallest
/// termination index among a and b), nullopt otherwise.
template <class T>
std::optional<int> termination_bound(const T& a, const T& b, int m) {
  auto n = detail::termination_index(a, b);
  if (!n) return std::nullopt;
  return *n * m;
}

template <class T>
std::optional<int> termination_bound(const HgfParams<T>& p, int m) {
  return termination_bound(p.a, p.b, m);
}

namespace detail {

/// Shared one-/two-argument shell summation. Y == nullptr gives 2F1(...; X);
/// otherwise each shell uses C_kappa(X) C_kappa(Y) / C_kappa(I_m).
template <class T>
SeriesResult<T> series_sum(const HgfParams<T>& p, const EigenSpectrum<T>& X,
                           const EigenSpectrum<T>* Y, const Truncation& tr, JackTable<T>* table) {
  const int m = X.m();
  if (Y && Y->m() != m)
    throw ShapeError("two-argument series needs spectra of equal size (got " +
                     std::to_string(m) + " and " + std::to_string(Y->m()) + ")");
  if (!table) table = &global_jack_table<T>();

  const auto n = termination_index(p.a, p.b);
  check_partitional_poles(p.c, p.d, m, n);

  SeriesResult<T> out;
  out.backend = scalar_traits<T>::is_exact ? Backend::exact : Backend::floating;

  double norm_product = X.norm() * (Y ? Y->norm() : 1.0);
  if (!n) {
    if constexpr (scalar_traits<T>::is_exact)
      throw DomainError("exact matrix 2F1 requires a terminating series (a or b in Z_{<=0})");
    const T one = scalar_traits<T>::from_int(1);
    const T nx = max_abs(X);
    const bool inside = Y ? (nx * max_abs(*Y) < one) : (nx < one);
    if (!inside)
      throw DomainError("matrix 2F1 series requires spectral norm < 1 when non-terminating");
    out.boundary_warning = norm_product >= 0.95;
  }

  const int cap = n ? *n * m : tr.max_weight;

  T value = scalar_traits<T>::from_int(1);  // k = 0 shell
  T kfact = scalar_traits<T>::from_int(1);
  out.max_weight_used = 0;
  out.last_shell_magnitude = 1.0;
  double prev_mag = 1.0;

  for (int k = 1; k <= cap; ++k) {
    kfact *= scalar_traits<T>::from_int(k);
    const auto kappas = enumerate_partitions(k, m);
    const auto cx = jack_c_shell<T>(k, std::span<const T>(X.values), p.d, table);
    std::vector<T> cy;
    if (Y) cy = jack_c_shell<T>(k, std::span<const T>(Y->values), p.d, table);

    T shell = scalar_traits<T>::from_int(0);
    for (std::size_t i = 0; i < kappas.size(); ++i) {
      const Partition& kappa = kappas[i];
      if (n && kappa.part(0) > *n) continue;  // [a]_kappa or [b]_kappa vanishes
      const T den = partitional_rising_factorial(p.c, kappa, p.d);
      if (den == scalar_traits<T>::from_int(0))
        throw PoleError("matrix 2F1: [c]_kappa vanished for kappa=" + kappa.to_string(), 1);
      T coeff = partitional_rising_factorial(p.a, kappa, p.d) *
                partitional_rising_factorial(p.b, kappa, p.d) / den;
      if (coeff == scalar_traits<T>::from_int(0)) continue;
      coeff *= cx[i];
      if (Y) coeff *= cy[i] / jack_c_at_identity<T>(kappa, m, p.d, table);
      shell += coeff;
    }
    const T term = shell / kfact;
    value += term;
    out.max_weight_used = k;

    const double mag = std::fabs(hgfm::to_double(term));
    if (mag != 0.0) out.last_shell_magnitude = mag;

    if (!n && k >= tr.min_weight) {
      const double scale = std::fabs(hgfm::to_double(value));
      if (mag <= tr.rel_tol * scale && prev_mag <= tr.rel_tol * scale) break;
    }
    prev_mag = mag;
  }

  out.value = value;
  out.terminated = n.has_value();
  return out;
}

}  // namespace detail

/// 2F1(a, b; c; X) of matrix argument.
template <class T>
SeriesResult<T> evaluate(const HgfParams<T>& p, const EigenSpectrum<T>& X,
                         const Truncation& tr = {}, JackTable<T>* table = nullptr) {
  return detail::series_sum(p, X, static_cast<const EigenSpectrum<T>*>(nullptr), tr, table);
}

/// The two-argument series 2F1(a, b; c; X, Y) with shells
/// [a][b]/[c] * C_kappa(X) C_kappa(Y) / C_kappa(I_m); it reduces to the
/// one-argument function at Y = I_m.
template <class T>
SeriesResult<T> evaluate_two(const HgfParams<T>& p, const EigenSpectrum<T>& X,
                             const EigenSpectrum<T>& Y, const Truncation& tr = {},
                             JackTable<T>* table = nullptr) {
  return detail::series_sum(p, X, &Y, tr, table);
}

/// Per-shell contributions (shell sum / k!) for weights 0..max_weight, with
/// no early stopping; shell 0 is always 1. Pass Y for the two-argument
/// series. Used by the m = 1 reduction tests and the benchmark driver.
template <class T>
std::vector<T> shell_values(const HgfParams<T>& p, const EigenSpectrum<T>& X,
                            const EigenSpectrum<T>* Y, int max_weight,
                            JackTable<T>* table = nullptr) {
  const int m = X.m();
  if (Y && Y->m() != m) throw ShapeError("two-argument series needs spectra of equal size");
  if (!table) table = &global_jack_table<T>();
  const auto n = detail::termination_index(p.a, p.b);
  detail::check_partitional_poles(p.c, p.d, m, n);

  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(max_weight) + 1);
  out.push_back(scalar_traits<T>::from_int(1));
  T kfact = scalar_traits<T>::from_int(1);
  for (int k = 1; k <= max_weight; ++k) {
    kfact *= scalar_traits<T>::from_int(k);
    const auto kappas = enumerate_partitions(k, m);
    const auto cx = jack_c_shell<T>(k, std::span<const T>(X.values), p.d, table);
    std::vector<T> cy;
    if (Y) cy = jack_c_shell<T>(k, std::span<const T>(Y->values), p.d, table);
    T shell = scalar_traits<T>::from_int(0);
    for (std::size_t i = 0; i < kappas.size(); ++i) {
      const Partition& kappa = kappas[i];
      if (n && kappa.part(0) > *n) continue;
      const T den = partitional_rising_factorial(p.c, kappa, p.d);
      if (den == scalar_traits<T>::from_int(0))
        throw PoleError("matrix 2F1: [c]_kappa vanished for kappa=" + kappa.to_string(), 1);
      T coeff = partitional_rising_factorial(p.a, kappa, p.d) *
                partitional_rising_factorial(p.b, kappa, p.d) / den;
      if (coeff == scalar_traits<T>::from_int(0)) continue;
      coeff *= cx[i];
      if (Y) coeff *= cy[i] / jack_c_at_identity<T>(kappa, m, p.d, table);
      shell += coeff;
    }
    out.push_back(shell / kfact);
  }
  return out;
}

}  // namespace hgfm
