#pragma once

#include "hgfm/determinantal.hpp"
#include "hgfm/matrix_hgf.hpp"
#include "hgfm/probes.hpp"
#include "hgfm/report.hpp"
#include "hgfm/scalar_hgf.hpp"
#include "hgfm/types.hpp"

#include <array>
#include <vector>

namespace hgfm {

// Machine verification of the identities: the matrix/Jack reflection
// formula, the Gauss/Herz summation at the identity matrix, membership in
// the generalized Muirhead PDE system, the 2x2 Hermitian quadratic
// transformation, and the classical scalar identities they extend.

/// The three hypotheses of the reflection formula, checked exactly on
/// rational parameters with N = {1, 2, 3, ...}:
///   termination:  -a + 1 + (j-1)d in N (or the same for b) for some j;
///   c-condition:  -c + 1 + (j-1)d not in N for all j = 1..m;
///   cab-condition: -a - b + c - (m-j)d not in N for all j = 1..m.
struct ReflectionHypotheses {
  bool terminating = false;
  int termination_j = 0;        // witnessing j (1-based)
  char termination_param = 0;   // 'a' or 'b'
  bool c_admissible = true;
  int c_violation_j = 0;
  bool cab_admissible = true;
  int cab_violation_j = 0;
  bool all() const { return terminating && c_admissible && cab_admissible; }
};

ReflectionHypotheses check_reflection_hypotheses(const HgfParams<Rational>& p, int m);

/// Verifies 2F1(a,b; a+b+1-c+(m-1)d; I-X) = R * 2F1(a,b; c; X) on the given
/// probes (entries strictly inside (0,1)), with R the reciprocal Gauss ratio
/// from the Pochhammer branch. Requires the j = 1 termination branch (a or
/// b a nonpositive integer); exact backend demands rational equality.
VerificationReport verify_reflection(const HgfParams<Rational>& p, int m,
                                     const std::vector<EigenSpectrum<Rational>>& probes,
                                     Backend backend, const Truncation& tr = {},
                                     double tol = 1e-8);

/// Verifies the summation 2F1(a,b;c;I_m) = Gamma-ratio for terminating
/// a = -n with c - a - b > (m-1)d. Exact for rational d; for d outside
/// {1/2, 1} the report notes the check is an empirical extension.
VerificationReport verify_gauss_at_identity(const HgfParams<Rational>& p, int m, Backend backend,
                                            double tol = 1e-8);

/// The generalized Muirhead operator applied to F = 2F1(a,b;c;X) at probe X
/// in coordinate i (0-based), via central second-order finite differences
/// with step h:
///   x_i(1-x_i) F_ii + [c - (m-1)d - (a+b+1-(m-1)d) x_i
///     + d sum_{j!=i} x_i(1-x_i)/(x_i-x_j)] F_i
///     - d sum_{j!=i} x_j(1-x_j)/(x_i-x_j) F_j - ab F.
/// The residual should vanish; compare against scale = |ab F|.
struct MuirheadResidual {
  double residual = 0.0;
  double scale = 0.0;  // |a b F(X)|
  double f_value = 0.0;
};

MuirheadResidual muirhead_residual(const HgfParams<double>& p, const EigenSpectrum<double>& X,
                                   int i, double h, const Truncation& tr = Truncation{60, 1e-14, 8});

/// Residuals at every coordinate of every probe, plus an O(h^2) convergence
/// check (halving h divides the residual by ~4) on the first probe.
VerificationReport verify_muirhead(const HgfParams<double>& p,
                                   const std::vector<EigenSpectrum<double>>& probes, double h,
                                   double tol = 1e-5);

/// The 2x2 Hermitian quadratic transformation, in the algebraically
/// corrected form this artifact verifies (see README): with w_i =
/// 4 x_i/(1+x_i)^2 and (a,b,c) = (alpha+1, alpha-beta+3/2, beta+3/2),
///
///   c21^{-1} (x1+x2) 2F1(a, b; c; X^2)
///     = -alpha prod_j (1+x_j)^{-2 alpha - 1} 2F1(alpha,beta;2beta;w_j)
///       + alpha (1+x1)^{-2 alpha-2} (1+x2)^{-2 alpha-1} *
///         [ -(2 x1/(1+x1)) 2F1(alpha+1,beta+1;2beta+1;w1)
///                          2F1(alpha,beta;2beta;w2)
///           + ((1-x2)(1-x1 x2)/(1+x2)^2)
///             2F1(alpha+1,beta+1;2beta+1; diag(w1,w2)) ].
///
/// Each probe also evaluates the identity's published form (coefficient
/// x1/(1+x1) and denominator (1+x2)^3) and records its residual in the
/// probe note as diagnostic evidence for the correction.
VerificationReport verify_quadratic_2x2(double alpha, double beta,
                                        const std::vector<std::array<double, 2>>& probes,
                                        const Truncation& tr = kDetEntryTruncation,
                                        double tol = 1e-8);

/// Scalar-identity harness: the classical reflection (exact terminating
/// grid), the scalar quadratic transformation, Hannah's finite form, and
/// the x-independence of the reflection ratio.
enum class ScalarIdentity { reflection, quadratic, hannah, ratio_constancy };

VerificationReport verify_scalar_identity(ScalarIdentity which, const SamplingPlan& plan = {20, 1},
                                          double tol = 1e-11);

}  // namespace hgfm
