#include "hgfm/determinantal.hpp"

#include "hgfm/matrix_hgf.hpp"
#include "hgfm/smallmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace hgfm {

namespace {

constexpr double kCoincidenceThreshold = 1e-9;

void require_hermitian(const ConeParameter& d) {
  if (!(d.d() == Rational(1)))
    throw DomainError("determinantal reductions are Hermitian-only (require d = 1)");
}

/// Eigenvalues sorted descending and grouped by the coincidence threshold.
struct Group {
  double t;  // representative (first member)
  int r;     // multiplicity
};

std::vector<Group> group_eigenvalues(const EigenSpectrum<double>& X) {
  std::vector<double> v = X.values;
  std::sort(v.begin(), v.end(), std::greater<double>());
  std::vector<Group> out;
  for (double x : v) {
    if (!out.empty() && std::fabs(out.back().t - x) <= kCoincidenceThreshold)
      ++out.back().r;
    else
      out.push_back({x, 1});
  }
  return out;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binom_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

double falling_d(int p, int q) {  // p (p-1) ... (p-q+1)
  double out = 1.0;
  for (int i = 0; i < q; ++i) out *= p - i;
  return out;
}

/// Confluent-limit normalization shared by both reductions: replacing the
/// rows of a coincident group by derivative rows f^(s)(t)/s! and dividing by
/// the cross-group Vandermonde prod_{g<h} (t_g - t_h)^{r_g r_h} picks up the
/// sign (-1)^{sum_g r_g (r_g - 1)/2}.
double cross_vandermonde(const std::vector<Group>& groups) {
  double out = 1.0;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t h = g + 1; h < groups.size(); ++h)
      out *= std::pow(groups[g].t - groups[h].t, groups[g].r * groups[h].r);
  return out;
}

int confluent_sign(const std::vector<Group>& groups) {
  int exponent = 0;
  for (const auto& g : groups) exponent += g.r * (g.r - 1) / 2;
  return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace

double eval_one_det(const HgfParams<double>& p, const EigenSpectrum<double>& X,
                    const Truncation& tr) {
  require_hermitian(p.d);
  const int m = X.m();
  if (m < 1) throw ShapeError("eval_one_det needs m >= 1");

  const auto groups = group_eigenvalues(X);
  // Entry column j (1-based): g_j(x) = x^{m-j} 2F1(a-j+1, b-j+1; c-j+1; x).
  // Row for group g, derivative order s: entries d^s/dx^s g_j (t_g) / s!,
  // expanded by Leibniz over the power factor.
  std::vector<std::vector<double>> M;
  M.reserve(static_cast<std::size_t>(m));
  for (const auto& g : groups) {
    for (int s = 0; s < g.r; ++s) {
      std::vector<double> row(static_cast<std::size_t>(m));
      for (int j = 1; j <= m; ++j) {
        const ScalarHgfParams<double> q{p.a - (j - 1), p.b - (j - 1), p.c - (j - 1)};
        const int pw = m - j;
        double entry = 0.0;
        for (int qd = 0; qd <= std::min(s, pw); ++qd) {
          const double power_term = falling_d(pw, qd) * std::pow(g.t, pw - qd);
          if (power_term == 0.0) continue;
          entry += binom_d(s, qd) * power_term * gauss_2f1_derivative(q, g.t, s - qd, tr);
        }
        row[static_cast<std::size_t>(j - 1)] = entry / factorial_d(s);
      }
      M.push_back(std::move(row));
    }
  }
  return confluent_sign(groups) * detail::det_small(M) / cross_vandermonde(groups);
}

namespace detail {

/// The two-argument determinant expression without the c_{2,1} constant,
/// det(2F1(a-m+1, b-m+1; c-m+1; x_i y_j)) / (V(X) V(Y)), evaluated as the
/// determinant of the bivariate divided-difference table of the entry
/// kernel f(z) = sum_t c_t z^t:
///
///   D_{ij} = f[x_1..x_i; y_1..y_j]
///          = sum_t c_t h_{t-i+1}(x_1..x_i) h_{t-j+1}(y_1..y_j),
///
/// with h_k the complete homogeneous sums. Forming det[f(x_i y_j)] directly
/// loses ~|V(X) V(Y)| of relative precision to cancellation (the matrix is
/// nearly rank-one); the divided-difference table assembles from
/// nonnegative products for nonnegative spectra and handles coincident
/// eigenvalues with no separate confluent case.
double two_det_raw(const HgfParams<double>& p, const EigenSpectrum<double>& X,
                   const EigenSpectrum<double>& Y, const Truncation& tr) {
  require_hermitian(p.d);
  const int m = X.m();
  if (Y.m() != m) throw ShapeError("eval_two_det needs spectra of equal size");
  if (m < 1) throw ShapeError("eval_two_det needs m >= 1");

  const ScalarHgfParams<double> q{p.a - (m - 1), p.b - (m - 1), p.c - (m - 1)};
  const auto top = hgfm::detail::scalar_termination_index(q.a, q.b);
  hgfm::detail::check_scalar_pole(q.c, top);
  if (!top && !(X.norm() * Y.norm() < 1.0))
    throw DomainError("two-argument kernel requires |x| |y| < 1 when non-terminating");

  std::vector<double> xv = X.values, yv = Y.values;
  std::sort(xv.rbegin(), xv.rend());
  std::sort(yv.rbegin(), yv.rend());

  // hx[r][k] = h_k(xv[0..r]) via h_k(r+1 nodes) = h_k(r nodes) + x_r h_{k-1},
  // grown one degree per series term.
  std::vector<std::vector<double>> hx(static_cast<std::size_t>(m)),
      hy(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    hx[static_cast<std::size_t>(r)].push_back(1.0);
    hy[static_cast<std::size_t>(r)].push_back(1.0);
  }
  auto grow = [](std::vector<std::vector<double>>& h, const std::vector<double>& nodes, int t) {
    for (std::size_t r = 0; r < h.size(); ++r) {
      const double below = r == 0 ? 0.0 : h[r - 1][static_cast<std::size_t>(t)];
      h[r].push_back(below + nodes[r] * h[r][static_cast<std::size_t>(t - 1)]);
    }
  };

  std::vector<std::vector<double>> D(static_cast<std::size_t>(m),
                                     std::vector<double>(static_cast<std::size_t>(m), 0.0));
  double coeff = 1.0;  // c_t = (a')_t (b')_t / ((c')_t t!)
  double scale = 0.0;  // max |D_ij| so far, for the stop rule
  int quiet = 0;
  for (int t = 0; /* below */; ++t) {
    if (t > 0) {
      coeff *= (q.a + (t - 1)) * (q.b + (t - 1)) / ((q.c + (t - 1)) * t);
      grow(hx, xv, t);
      grow(hy, yv, t);
    }
    double shell_mag = 0.0;
    if (coeff != 0.0) {
      for (int i = 0; i < m; ++i) {
        if (t - i < 0) continue;
        for (int j = 0; j < m; ++j) {
          if (t - j < 0) continue;
          const double inc = coeff * hx[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - i)] *
                             hy[static_cast<std::size_t>(j)][static_cast<std::size_t>(t - j)];
          D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += inc;
          shell_mag = std::max(shell_mag, std::fabs(inc));
        }
      }
      scale = std::max(scale, shell_mag);
    }
    if (top && t >= *top) break;  // c_t = 0 beyond the terminating index
    if (!top) {
      quiet = (t >= 2 * m && shell_mag <= 1e-17 * scale) ? quiet + 1 : 0;
      if (quiet >= 2) break;
      if (t >= tr.max_weight)
        throw DomainError("two-argument kernel did not converge within the weight cap");
    }
  }
  return det_small(D);
}

}  // namespace detail

double eval_two_det(const HgfParams<double>& p, const EigenSpectrum<double>& X,
                    const EigenSpectrum<double>& Y, const DeterminantalConstant& c21,
                    const Truncation& tr) {
  return c21.value * detail::two_det_raw(p, X, Y, tr);
}

DeterminantalConstant calibrate_c21(const HgfParams<double>& p, int m, const SamplingPlan& plan,
                                    const Truncation& tr) {
  require_hermitian(p.d);
  if (m < 1) throw ShapeError("calibrate_c21 needs m >= 1");
  if (m == 1) return {1.0, DeterminantalConstant::Provenance::calibrated, 0.0};

  const int count = std::max(plan.count, 2);
  const auto xs = probe_spectra(count, m, 0.12, 0.45, plan.seed * 2 + 1);
  const auto ys = probe_spectra(count, m, 0.10, 0.40, plan.seed * 2 + 101);

  const Truncation series_tr{60, 1e-15, 8};
  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double series =
        evaluate_two(p, xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)],
                     series_tr)
            .value;
    const double raw =
        detail::two_det_raw(p, xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)],
                            tr);
    ratios.push_back(series / raw);
  }
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (double r : ratios) spread = std::max(spread, std::fabs(r - mean) / std::fabs(mean));
  if (spread > 1e-8)
    throw CalibrationError("c21 calibration spread " + format_double(spread) +
                           " exceeds 1e-8; the det/series ratio should be constant");
  return {mean, DeterminantalConstant::Provenance::calibrated, spread};
}

double c21_printed_candidate(const HgfParams<double>& p, int m) {
  require_hermitian(p.d);
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= m; ++i) {
    num *= rising_factorial(p.c - (m - 1), m - i);
    den *= factorial_d(i - 1) * rising_factorial(p.a - (m - 1), m - i) *
           rising_factorial(p.b - (m - 1), m - i);
  }
  return num / den;
}

}  // namespace hgfm
