#pragma once

#include <vector>

#include "berncov/rational.hpp"

namespace berncov {

/// Pascal-triangle rows 0..n of exact binomial coefficients.
/// Immutable after construction and safe to share across threads.
class BinomialTable {
 public:
  explicit BinomialTable(int n);

  int max_row() const { return static_cast<int>(rows_.size()) - 1; }

  /// C(m,k), with the convention C(m,k) = 0 for k < 0 or k > m.
  const BigInt& at(int m, int k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Exact C(m,k); 0 outside 0 <= k <= m. Backed by a shared cached table
/// grown on demand. Throws std::domain_error for m < 0.
BigInt binom(int m, int k);

/// Number of bit vectors of weight k on which a fixed pair of coordinates
/// agrees: C(n-2,k) vectors with both coordinates 0 plus C(n-2,k-2) with
/// both 1. Requires n >= 2 and 0 <= k <= n.
BigInt pair_agreement_count(int n, int k);

/// Probability that a fixed pair of coordinates agrees on a uniformly
/// random bit vector of weight k:
///   ((n-k)(n-k-1) + k(k-1)) / (n(n-1)),
/// which equals pair_agreement_count(n,k) / C(n,k) whenever C(n,k) > 0.
/// Unimodal in k with the minimum at the middle layer(s).
Rational pair_agreement_ratio(int n, int k);

}  // namespace berncov
