#include "berncov/constructors.hpp"

#include <utility>

#include "berncov/combinatorics.hpp"
#include "berncov/intraclass.hpp"

namespace berncov {

InfeasibleTargetError::InfeasibleTargetError(FeasibilityReport report)
    : std::runtime_error("target agreement probability " +
                         format_fraction(report.p) + " is below the binary bound " +
                         format_fraction(report.p_min_binary) + " for n = " +
                         std::to_string(report.n)),
      report_(std::move(report)) {}

int middle_layer(int n) {
  if (n < 2) throw std::domain_error("middle_layer: n must be >= 2");
  return (n + 1) / 2;
}

Rational p_min_binary(int n) {
  const int m = middle_layer(n);
  return Rational(m - 1, 2 * m - 1);
}

CountPmf min_agreement_pmf(int n) {
  const int m = middle_layer(n);
  VectorXq weights = VectorXq::Zero(n + 1);
  if (n % 2 == 0) {
    weights(m) = Rational(1) / Rational(binom(n, m));
  } else {
    // The two middle layers m-1 = n-m and m split the mass evenly.
    weights(m - 1) = Rational(1, 2) / Rational(binom(n, m));
    weights(m) = weights(m - 1);
  }
  return CountPmf(n, std::move(weights));
}

CountPmf max_agreement_pmf(int n) {
  if (n < 2) throw std::domain_error("max_agreement_pmf: n must be >= 2");
  VectorXq weights = VectorXq::Zero(n + 1);
  weights(0) = Rational(1, 2);
  weights(n) = Rational(1, 2);
  return CountPmf(n, std::move(weights));
}

CountPmf construct_for_p(int n, const Rational& p) {
  FeasibilityReport report = classify(n, p, QuantityKind::agreement);
  if (!report.symmetric_binary_good) throw InfeasibleTargetError(std::move(report));

  // p_min_binary < 1/2, so the denominator never vanishes.
  const Rational lambda = (1 - p) / (1 - report.p_min_binary);
  const VectorXq weights = lambda * min_agreement_pmf(n).weights() +
                           (1 - lambda) * max_agreement_pmf(n).weights();
  return CountPmf(n, weights);
}

FeasibilityReport classify(int n, const Rational& value, QuantityKind kind) {
  const Rational p = kind == QuantityKind::agreement ? value : p_from_rho(value);
  if (p < 0 || p > 1)
    throw std::domain_error("classify: agreement probability must lie in [0, 1]");
  FeasibilityReport report;
  report.n = n;
  report.p = p;
  report.rho = rho_from_p(p);
  report.p_psd_threshold = p_psd_threshold(n);
  report.p_min_binary = p_min_binary(n);
  report.good = p >= report.p_psd_threshold;
  report.symmetric_binary_good = p >= report.p_min_binary;
  return report;
}

}  // namespace berncov
