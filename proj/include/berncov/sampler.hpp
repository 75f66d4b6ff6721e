#pragma once

#include <cstdint>
#include <ostream>

#include <Eigen/Core>

#include "berncov/count_pmf.hpp"

namespace berncov {

/// A batch of bit vectors drawn i.i.d. from a count pmf. Row t of `vectors`
/// is the t-th draw; entries are 0/1.
struct SampleBatch {
  int n;
  std::uint64_t seed;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>
      vectors;

  std::int64_t count() const { return vectors.rows(); }
};

/// Draws `count` vectors from `pmf` (which must have fair marginals). Each
/// draw picks a weight K with probability C(n,K) * weight(K) by comparing
/// 128 fresh bits against exact cumulative thresholds, then places K ones on
/// a uniform random K-subset via partial Fisher-Yates shuffling. The batch
/// is a pure function of (pmf, count, seed): vector t uses the Philox
/// stream (seed, t), so output is identical no matter how the work is
/// split or ordered.
SampleBatch sample(const CountPmf& pmf, std::int64_t count, std::uint64_t seed);

struct EmpiricalStats {
  Eigen::VectorXd coordinate_means;
  Eigen::MatrixXd pair_agreement;  // symmetric, unit diagonal
  double mean_agreement;           // average over unordered pairs
};

EmpiricalStats estimate(const SampleBatch& batch);

/// One row per vector, n comma-separated 0/1 values, '\n' line endings.
/// The optional header row is "x1,...,xn".
void write_csv(std::ostream& os, const SampleBatch& batch, bool header = false);

}  // namespace berncov
