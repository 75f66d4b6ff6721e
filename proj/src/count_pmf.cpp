#include "berncov/count_pmf.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "berncov/combinatorics.hpp"

namespace berncov {

CountPmf::CountPmf(int n, VectorXq weights) : n_(n), weights_(std::move(weights)) {
  if (n_ < 2) throw std::domain_error("CountPmf: n must be >= 2");
  if (weights_.size() != n_ + 1)
    throw std::invalid_argument("CountPmf: expected n + 1 weights");
  Rational total = 0;
  for (int k = 0; k <= n_; ++k) {
    if (weights_(k) < 0)
      throw std::invalid_argument("CountPmf: weights must be nonnegative");
    total += Rational(binom(n_, k)) * weights_(k);
  }
  if (total != 1)
    throw std::invalid_argument(
        "CountPmf: sum of C(n,k) * weight(k) must equal 1 exactly, got " +
        format_fraction(total));
}

bool check_marginals(const CountPmf& pmf) {
  Rational sum = 0;
  for (int k = 0; k <= pmf.n(); ++k)
    sum += Rational(binom(pmf.n() - 1, k)) * pmf[k];
  return sum == Rational(1, 2);
}

Rational agreement_probability(const CountPmf& pmf) {
  if (!check_marginals(pmf))
    throw std::logic_error(
        "agreement_probability: pmf does not have fair marginals");
  Rational p = 0;
  for (int k = 0; k <= pmf.n(); ++k)
    p += Rational(pair_agreement_count(pmf.n(), k)) * pmf[k];
  return p;
}

MatrixXq covariance_matrix(const CountPmf& pmf) {
  if (!check_marginals(pmf))
    throw std::logic_error("covariance_matrix: pmf does not have fair marginals");
  // P(X_i = 1, X_j = 1): vectors with ones at both coordinates.
  Rational both_ones = 0;
  for (int k = 2; k <= pmf.n(); ++k)
    both_ones += Rational(binom(pmf.n() - 2, k - 2)) * pmf[k];
  return build_matrix(
      IntraclassSpec(pmf.n(), Rational(1, 4), both_ones - Rational(1, 4)));
}

FullPmf::FullPmf(int n, VectorXq masses) : n_(n), masses_(std::move(masses)) {
  if (n_ < 2) throw std::domain_error("FullPmf: n must be >= 2");
  if (n_ > kMaxN)
    throw std::domain_error("FullPmf: n exceeds the dense-table limit of 16");
  if (masses_.size() != Eigen::Index{1} << n_)
    throw std::invalid_argument("FullPmf: expected 2^n masses");
  Rational total = 0;
  for (Eigen::Index x = 0; x < masses_.size(); ++x) {
    if (masses_(x) < 0)
      throw std::invalid_argument("FullPmf: masses must be nonnegative");
    total += masses_(x);
  }
  if (total != 1)
    throw std::invalid_argument("FullPmf: masses must sum to 1 exactly, got " +
                                format_fraction(total));
}

SymmetrizeResult symmetrize(const FullPmf& full) {
  const int n = full.n();
  const auto size = static_cast<std::uint32_t>(full.size());

  VectorXq buckets = VectorXq::Zero(n + 1);
  for (std::uint32_t x = 0; x < size; ++x)
    buckets(std::popcount(x)) += full[x];

  VectorXq weights(n + 1);
  for (int k = 0; k <= n; ++k) weights(k) = buckets(k) / Rational(binom(n, k));
  CountPmf pmf(n, std::move(weights));
  if (!check_marginals(pmf))
    throw std::invalid_argument(
        "symmetrize: average marginal differs from 1/2, the result is not a "
        "fair-coin law");

  bool marginals_uniform = true;
  for (int i = 0; i < n && marginals_uniform; ++i) {
    Rational zero_at_i = 0;
    for (std::uint32_t x = 0; x < size; ++x)
      if (((x >> i) & 1u) == 0) zero_at_i += full[x];
    marginals_uniform = zero_at_i == Rational(1, 2);
  }

  bool agreements_uniform = true;
  bool have_reference = false;
  Rational reference;
  for (int i = 0; i < n && agreements_uniform; ++i) {
    for (int j = i + 1; j < n && agreements_uniform; ++j) {
      Rational agree = 0;
      for (std::uint32_t x = 0; x < size; ++x)
        if (((x >> i) & 1u) == ((x >> j) & 1u)) agree += full[x];
      if (!have_reference) {
        reference = agree;
        have_reference = true;
      } else {
        agreements_uniform = agree == reference;
      }
    }
  }

  return {std::move(pmf), marginals_uniform, agreements_uniform};
}

FullPmf expand_to_full(const CountPmf& pmf) {
  const int n = pmf.n();
  if (n > FullPmf::kMaxN)
    throw std::domain_error("expand_to_full: n exceeds the dense-table limit of 16");
  VectorXq masses(Eigen::Index{1} << n);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
    masses(x) = pmf[std::popcount(x)];
  return FullPmf(n, std::move(masses));
}

}  // namespace berncov
