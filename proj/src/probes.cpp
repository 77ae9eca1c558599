#include "hgfm/probes.hpp"

#include "hgfm/errors.hpp"

#include <array>

namespace hgfm {

namespace {

constexpr std::array<unsigned, 8> kPrimeBases = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace

Rational halton_rational(std::uint64_t index, unsigned base) {
  if (base < 2) throw DomainError("halton base must be >= 2");
  Rational out(0);
  Rational scale(1, base);
  while (index > 0) {
    out += Rational(static_cast<long>(index % base)) * scale;
    scale /= base;
    index /= base;
  }
  return out;
}

std::vector<EigenSpectrum<Rational>> rational_probe_spectra(int count, int m, const Rational& lo,
                                                            const Rational& hi, unsigned seed) {
  if (m < 0 || m > static_cast<int>(kPrimeBases.size()))
    throw ShapeError("probe spectra support 0 <= m <= 8");
  if (!(lo < hi)) throw DomainError("probe range must satisfy lo < hi");
  std::vector<EigenSpectrum<Rational>> out;
  out.reserve(static_cast<std::size_t>(count));
  const Rational width = hi - lo;
  std::uint64_t index = seed + 1;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      // Shrink toward the interior so endpoints are never hit.
      Rational u = (halton_rational(index, kPrimeBases[static_cast<std::size_t>(i)]) *
                        Rational(62, 64) +
                    Rational(1, 64));
      vals.push_back(lo + width * u);
    }
    ++index;
    bool distinct = true;
    for (std::size_t i = 0; i < vals.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < vals.size(); ++j)
        if (vals[i] == vals[j]) {
          distinct = false;
          break;
        }
    if (!distinct) continue;  // try the next index
    out.emplace_back(std::move(vals));
  }
  return out;
}

std::vector<EigenSpectrum<double>> probe_spectra(int count, int m, double lo, double hi,
                                                 unsigned seed) {
  auto rat = rational_probe_spectra(count, m, Rational(1, 1000000) * static_cast<long>(lo * 1e6),
                                    Rational(1, 1000000) * static_cast<long>(hi * 1e6), seed);
  std::vector<EigenSpectrum<double>> out;
  out.reserve(rat.size());
  for (const auto& X : rat) {
    std::vector<double> vals;
    vals.reserve(X.values.size());
    for (const auto& v : X.values) vals.push_back(to_double(v));
    out.emplace_back(std::move(vals));
  }
  return out;
}

}  // namespace hgfm
