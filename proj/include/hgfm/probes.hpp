#pragma once

#include "hgfm/rational.hpp"
#include "hgfm/types.hpp"

#include <cstdint>
#include <vector>

namespace hgfm {

/// Deterministic probe plan: `count` points derived from a seeded Halton
/// sequence, reproducible across runs and platforms.
struct SamplingPlan {
  int count = 5;
  unsigned seed = 1;
};

/// Radical-inverse (van der Corput / Halton) value of `index` in `base`,
/// exact as a rational: a dyadic/triadic/... fraction in [0, 1).
Rational halton_rational(std::uint64_t index, unsigned base);

inline double halton(std::uint64_t index, unsigned base) {
  return to_double(halton_rational(index, base));
}

/// `count` spectra of size m with exact rational entries in (lo, hi),
/// coordinate i driven by the i-th prime base, probe index offset by seed.
/// Entries within a spectrum are kept pairwise distinct.
std::vector<EigenSpectrum<Rational>> rational_probe_spectra(int count, int m, const Rational& lo,
                                                            const Rational& hi, unsigned seed);

std::vector<EigenSpectrum<double>> probe_spectra(int count, int m, double lo, double hi,
                                                 unsigned seed);

}  // namespace hgfm
