#include "berncov/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "berncov/combinatorics.hpp"
#include "berncov/philox.hpp"

namespace berncov {

namespace {

// Integer weight thresholds: threshold[k] = ceil(2^128 * P(weight <= k)).
// A 128-bit uniform draw U then lands on weight K = first k with
// U < threshold[k]; the comparison is exact, so zero-probability weights
// are never produced and boundary masses are honored to within 2^-128.
std::vector<BigInt> weight_thresholds(const CountPmf& pmf) {
  std::vector<BigInt> thresholds;
  thresholds.reserve(static_cast<std::size_t>(pmf.n()) + 1);
  Rational cumulative = 0;
  for (int k = 0; k <= pmf.n(); ++k) {
    cumulative += Rational(binom(pmf.n(), k)) * pmf[k];
    const BigInt num = numerator(cumulative);
    const BigInt den = denominator(cumulative);
    thresholds.push_back(((num << 128) + den - 1) / den);
  }
  return thresholds;
}

}  // namespace

SampleBatch sample(const CountPmf& pmf, std::int64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  if (!check_marginals(pmf))
    throw std::invalid_argument("sample: pmf must have fair marginals");

  const int n = pmf.n();
  const std::vector<BigInt> thresholds = weight_thresholds(pmf);

  SampleBatch batch;
  batch.n = n;
  batch.seed = seed;
  batch.vectors.setZero(count, n);

  std::vector<int> order(static_cast<std::size_t>(n));
  BigInt draw;
  for (std::int64_t t = 0; t < count; ++t) {
    PhiloxStream stream(seed, static_cast<std::uint64_t>(t));

    const auto words = stream.next_words();
    draw = words[3];
    draw <<= 32;
    draw += words[2];
    draw <<= 32;
    draw += words[1];
    draw <<= 32;
    draw += words[0];
    const int k = static_cast<int>(
        std::upper_bound(thresholds.begin(), thresholds.end(), draw) -
        thresholds.begin());

    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < k; ++i) {
      const int j =
          i + static_cast<int>(stream.next_below(static_cast<std::uint32_t>(n - i)));
      std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
      batch.vectors(t, order[static_cast<std::size_t>(i)]) = 1;
    }
  }
  return batch;
}

EmpiricalStats estimate(const SampleBatch& batch) {
  const std::int64_t count = batch.count();
  if (count == 0) throw std::invalid_argument("estimate: empty batch");
  const int n = batch.n;

  EmpiricalStats stats;
  stats.coordinate_means =
      batch.vectors.cast<double>().colwise().mean().transpose();

  stats.pair_agreement = Eigen::MatrixXd::Identity(n, n);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::int64_t agreements = 0;
      for (std::int64_t t = 0; t < count; ++t)
        agreements += batch.vectors(t, i) == batch.vectors(t, j);
      const double frequency = static_cast<double>(agreements) / static_cast<double>(count);
      stats.pair_agreement(i, j) = frequency;
      stats.pair_agreement(j, i) = frequency;
      total += frequency;
    }
  }
  stats.mean_agreement = n > 1 ? total / (n * (n - 1) / 2.0) : 1.0;
  return stats;
}

void write_csv(std::ostream& os, const SampleBatch& batch, bool header) {
  if (header) {
    for (int i = 0; i < batch.n; ++i) {
      if (i) os.put(',');
      os << 'x' << i + 1;
    }
    os.put('\n');
  }
  std::string line(static_cast<std::size_t>(2 * batch.n), ',');
  line.back() = '\n';
  for (std::int64_t t = 0; t < batch.count(); ++t) {
    for (int i = 0; i < batch.n; ++i)
      line[static_cast<std::size_t>(2 * i)] =
          batch.vectors(t, i) ? '1' : '0';
    os.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

}  // namespace berncov
