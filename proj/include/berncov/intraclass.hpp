#pragma once

#include "berncov/eigen_types.hpp"
#include "berncov/rational.hpp"

namespace berncov {

/// An n x n matrix with common diagonal entry `a` (variance) and common
/// off-diagonal entry `b` (covariance): (a - b) I + b 11^T.
struct IntraclassSpec {
  int n;
  Rational a;
  Rational b;

  /// Validates n >= 2 and a != 0 (zero common variance is rejected: such a
  /// matrix cannot carry a correlation and the degenerate all-zero case is
  /// excluded outright).
  IntraclassSpec(int n, Rational a, Rational b);

  /// Correlation form: unit variances, common correlation rho in [-1, 1].
  static IntraclassSpec from_correlation(int n, const Rational& rho);
};

MatrixXq build_matrix(const IntraclassSpec& spec);

/// The two eigenvalues of (a - b) I + b 11^T: the all-ones direction carries
/// a - b + n b (multiplicity 1), its orthogonal complement a - b
/// (multiplicity n - 1).
struct IntraclassEigenvalues {
  Rational along_ones;
  Rational orthogonal;
  int multiplicity_along_ones;
  int multiplicity_orthogonal;
};

IntraclassEigenvalues eigenvalues(const IntraclassSpec& spec);

/// True iff both eigenvalues are >= 0, i.e. -a/(n-1) <= b <= a with a >= 0.
bool is_psd(const IntraclassSpec& spec);

/// Smallest common correlation an n x n PSD intraclass matrix can have:
/// -1/(n-1).
Rational rho_min_psd(int n);

/// Agreement probability from correlation: p = (1 + rho)/2, rho in [-1, 1].
Rational p_from_rho(const Rational& rho);

/// Correlation from agreement probability: rho = 2p - 1, p in [0, 1].
Rational rho_from_p(const Rational& p);

/// Agreement probability matching rho_min_psd: (n-2)/(2(n-1)). Intraclass
/// correlation matrices with p below this are not PSD for any marginals.
Rational p_psd_threshold(int n);

}  // namespace berncov
