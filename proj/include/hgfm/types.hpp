#pragma once

#include "hgfm/errors.hpp"
#include "hgfm/gammafact.hpp"
#include "hgfm/rational.hpp"

#include <string>
#include <vector>

namespace hgfm {

enum class Backend { exact, floating };

inline const char* backend_name(Backend b) { return b == Backend::exact ? "exact" : "floating"; }

/// Series truncation policy. A non-terminating series stops once two
/// consecutive shell magnitudes fall below rel_tol times the running sum
/// (guarding alternating-shell cancellation), but never before min_weight
/// shells nor beyond max_weight.
struct Truncation {
  int max_weight = 40;
  double rel_tol = 1e-12;
  int min_weight = 8;
};

/// Eigenvalues of the (implicitly diagonalized) matrix argument. Order is
/// irrelevant to every evaluator; it is kept as given for reporting.
template <class T>
struct EigenSpectrum {
  std::vector<T> values;

  EigenSpectrum() = default;
  explicit EigenSpectrum(std::vector<T> v) : values(std::move(v)) {}

  int m() const { return static_cast<int>(values.size()); }

  double norm() const {  // max |x_i|, for reporting and warnings
    double n = 0.0;
    for (const auto& v : values) n = std::max(n, std::fabs(hgfm::to_double(v)));
    return n;
  }

  bool norm_less_than(const T& bound) const {  // exact comparison in T
    for (const auto& v : values)
      if (!(scalar_traits<T>::abs(v) < bound)) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ",";
      s += format_scalar(values[i]);
    }
    return s + ")";
  }
};

template <class T>
struct HgfParams {
  T a, b, c;
  ConeParameter d = ConeParameter::real_symmetric();
};

template <class T>
struct SeriesResult {
  T value{};
  int max_weight_used = 0;          // highest shell actually summed
  double last_shell_magnitude = 0;  // |final shell|; final nonzero shell when terminated
  bool terminated = false;          // true: series is a finite sum, value has no truncation error
  Backend backend = Backend::floating;
  bool boundary_warning = false;    // non-terminating evaluation with norm >= 0.95
};

}  // namespace hgfm
