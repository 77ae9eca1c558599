#pragma once

#include "hgfm/errors.hpp"
#include "hgfm/probes.hpp"
#include "hgfm/rational.hpp"
#include "hgfm/scalar_hgf.hpp"
#include "hgfm/types.hpp"

#include <array>
#include <span>

namespace hgfm {

// Hermitian-case (d = 1) determinantal reductions: the one- and
// two-argument matrix 2F1 collapse to m x m determinants of classical
// scalar 2F1 values, up to the constant c_{2,1}. Coincident eigenvalues
// are handled by confluent rows (successive derivatives).

/// Default truncation for the scalar series entries: cheap enough to run
/// deep and tight.
inline constexpr Truncation kDetEntryTruncation{5000, 1e-15, 8};

/// The normalizing constant of the two-argument reduction, with its origin
/// and (when calibrated) the max relative deviation across probes.
struct DeterminantalConstant {
  double value = 1.0;
  enum class Provenance { calibrated, closed_form_candidate } provenance =
      Provenance::closed_form_candidate;
  double probe_spread = 0.0;
};

/// V(X) = prod_{i<j} (x_i - x_j).
template <class T>
T vandermonde(std::span<const T> x) {
  T out = scalar_traits<T>::from_int(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) out *= x[i] - x[j];
  return out;
}

/// Hadamard's 2x2 expansion: det(a .* b) = a11 a22 det(b) + b12 b21 det(a)
/// for entrywise products of 2x2 matrices.
template <class T>
T hadamard_det2(const std::array<std::array<T, 2>, 2>& a,
                const std::array<std::array<T, 2>, 2>& b) {
  const T det_a = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  const T det_b = b[0][0] * b[1][1] - b[0][1] * b[1][0];
  return a[0][0] * a[1][1] * det_b + b[0][1] * b[1][0] * det_a;
}

/// One-argument reduction: det(x_i^{m-j} 2F1(a-j+1, b-j+1; c-j+1; x_i)) /
/// V(X), with confluent rows at coincident eigenvalues.
double eval_one_det(const HgfParams<double>& p, const EigenSpectrum<double>& X,
                    const Truncation& tr = kDetEntryTruncation);

/// Two-argument reduction: c21 * det(2F1(a-m+1, b-m+1; c-m+1; x_i y_j)) /
/// (V(X) V(Y)), confluent in either spectrum.
double eval_two_det(const HgfParams<double>& p, const EigenSpectrum<double>& X,
                    const EigenSpectrum<double>& Y, const DeterminantalConstant& c21,
                    const Truncation& tr = kDetEntryTruncation);

/// Fits c_{2,1} as the ratio of the two-argument series to the raw
/// determinant expression across probe spectra. The true ratio is constant
/// in X and Y; CalibrationError flags spread > 1e-8.
DeterminantalConstant calibrate_c21(const HgfParams<double>& p, int m,
                                    const SamplingPlan& plan = {},
                                    const Truncation& tr = kDetEntryTruncation);

/// The printed closed form for c_{2,1} with its undetermined beta_m factor
/// taken as 1:  prod_i (c-m+1)_{m-i} / ((i-1)! (a-m+1)_{m-i} (b-m+1)_{m-i}).
/// Stored as closed_form_candidate; the ratio candidate/calibrated estimates
/// beta_m.
double c21_printed_candidate(const HgfParams<double>& p, int m);

}  // namespace hgfm
