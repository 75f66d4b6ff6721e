#pragma once

#include <stdexcept>

#include "berncov/count_pmf.hpp"
#include "berncov/rational.hpp"

namespace berncov {

/// Classification of a target pairwise agreement / correlation for dimension
/// n. `good` means an intraclass PSD matrix with that correlation exists at
/// all; `symmetric_binary_good` means fair Bernoulli coordinates can realize
/// it, i.e. p_min_binary <= p <= 1. The second implies the first.
struct FeasibilityReport {
  int n;
  Rational p;
  Rational rho;
  bool good;
  bool symmetric_binary_good;
  Rational p_psd_threshold;
  Rational p_min_binary;
};

class InfeasibleTargetError : public std::runtime_error {
 public:
  explicit InfeasibleTargetError(FeasibilityReport report);
  const FeasibilityReport& report() const { return report_; }

 private:
  FeasibilityReport report_;
};

/// Index of the (upper) middle layer of the n-cube: ceil(n/2).
int middle_layer(int n);

/// Smallest agreement probability achievable by fair Bernoulli coordinates
/// with a common pairwise law: (m-1)/(2m-1) with m = middle_layer(n).
/// Equals (n-2)/(2(n-1)) for even n and (n-1)/(2n) for odd n.
Rational p_min_binary(int n);

/// The agreement-minimizing law: mass spread uniformly over the middle
/// layer(s) of the cube. Even n: every weight-n/2 vector gets 1/C(n,n/2);
/// odd n: the two middle layers share the mass half-and-half. Its agreement
/// probability is exactly p_min_binary(n).
CountPmf min_agreement_pmf(int n);

/// The agreement-maximizing law: all-zeros and all-ones, each with
/// probability 1/2. Agreement probability 1.
CountPmf max_agreement_pmf(int n);

/// The canonical law with agreement probability exactly p: the convex
/// mixture lambda * min_agreement_pmf + (1 - lambda) * max_agreement_pmf
/// with lambda = (1 - p) / (1 - p_min_binary(n)). Throws
/// InfeasibleTargetError for p in [0, p_min_binary(n)), std::domain_error
/// for p outside [0, 1].
CountPmf construct_for_p(int n, const Rational& p);

enum class QuantityKind { agreement, correlation };

/// Classifies a target value, given either as an agreement probability p in
/// [0, 1] or as a correlation rho in [-1, 1].
FeasibilityReport classify(int n, const Rational& value, QuantityKind kind);

}  // namespace berncov
