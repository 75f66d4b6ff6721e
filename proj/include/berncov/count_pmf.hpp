#pragma once

#include <cstddef>

#include "berncov/eigen_types.hpp"
#include "berncov/intraclass.hpp"
#include "berncov/rational.hpp"

namespace berncov {

/// Count representation of an exchangeable law on {0,1}^n: weight(k) is the
/// probability of each *single* bit vector with exactly k ones, so the total
/// mass at count k is C(n,k) * weight(k). Construction enforces
/// nonnegativity and the normalization sum_k C(n,k) weight(k) = 1 exactly.
/// Symmetry weight(k) == weight(n-k) is deliberately not required; it is a
/// property of particular constructions, not of the representation.
class CountPmf {
 public:
  CountPmf(int n, VectorXq weights);

  int n() const { return n_; }
  const VectorXq& weights() const { return weights_; }
  const Rational& operator[](int k) const { return weights_(k); }

 private:
  int n_;
  VectorXq weights_;  // n + 1 entries
};

/// True iff sum_k C(n-1,k) weight(k) = 1/2, i.e. every coordinate is a fair
/// coin. Together with the normalization this pins all marginals.
bool check_marginals(const CountPmf& pmf);

/// P(X_i = X_j) for any pair i != j: sum_k pair_agreement_count(n,k) *
/// weight(k). Requires fair marginals (throws std::logic_error otherwise).
Rational agreement_probability(const CountPmf& pmf);

/// Exact covariance matrix of the law: intraclass with diagonal 1/4 and
/// off-diagonal P(X_i=1, X_j=1) - 1/4 = (2p - 1)/4 where p is the agreement
/// probability. Requires fair marginals.
MatrixXq covariance_matrix(const CountPmf& pmf);

/// Explicit distribution over all 2^n bit vectors. Coordinate i of the
/// vector is bit i-1 of the index (the first coordinate is the
/// least-significant bit). Capped at n <= 16: beyond that the dense table of
/// exact rationals stops being reasonable.
class FullPmf {
 public:
  static constexpr int kMaxN = 16;

  FullPmf(int n, VectorXq masses);

  int n() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(masses_.size()); }
  const VectorXq& masses() const { return masses_; }
  const Rational& operator[](std::ptrdiff_t x) const { return masses_(x); }

 private:
  int n_;
  VectorXq masses_;  // 2^n entries
};

/// Permutation average of a joint law, realized by count-bucket averaging:
/// weight(k) = (sum of masses over vectors of weight k) / C(n,k). The result
/// must have fair marginals (equivalently, the input's *average* marginal is
/// 1/2); otherwise std::invalid_argument. The flags record whether the input
/// already had uniform marginals / uniform pairwise agreements, i.e. whether
/// averaging changed anything a pair statistic could see.
struct SymmetrizeResult {
  CountPmf pmf;
  bool marginals_uniform;
  bool agreements_uniform;
};

SymmetrizeResult symmetrize(const FullPmf& full);

/// Inverse embedding: mass(x) = weight(popcount(x)). Left inverse of
/// symmetrize on count representations.
FullPmf expand_to_full(const CountPmf& pmf);

}  // namespace berncov
