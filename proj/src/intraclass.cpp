#include "berncov/intraclass.hpp"

#include <stdexcept>
#include <utility>

namespace berncov {

IntraclassSpec::IntraclassSpec(int n, Rational a, Rational b)
    : n(n), a(std::move(a)), b(std::move(b)) {
  if (n < 2) throw std::domain_error("IntraclassSpec: n must be >= 2");
  if (this->a == 0)
    throw std::invalid_argument("IntraclassSpec: common variance a must be nonzero");
}

IntraclassSpec IntraclassSpec::from_correlation(int n, const Rational& rho) {
  if (rho < -1 || rho > 1)
    throw std::domain_error("IntraclassSpec: correlation must lie in [-1, 1]");
  return IntraclassSpec(n, Rational(1), rho);
}

MatrixXq build_matrix(const IntraclassSpec& spec) {
  MatrixXq matrix = MatrixXq::Constant(spec.n, spec.n, spec.b);
  matrix.diagonal().setConstant(spec.a);
  return matrix;
}

IntraclassEigenvalues eigenvalues(const IntraclassSpec& spec) {
  return {spec.a - spec.b + spec.n * spec.b, spec.a - spec.b, 1, spec.n - 1};
}

bool is_psd(const IntraclassSpec& spec) {
  const IntraclassEigenvalues ev = eigenvalues(spec);
  return ev.along_ones >= 0 && ev.orthogonal >= 0;
}

Rational rho_min_psd(int n) {
  if (n < 2) throw std::domain_error("rho_min_psd: n must be >= 2");
  return Rational(-1, n - 1);
}

Rational p_from_rho(const Rational& rho) {
  if (rho < -1 || rho > 1)
    throw std::domain_error("p_from_rho: correlation must lie in [-1, 1]");
  return (1 + rho) / 2;
}

Rational rho_from_p(const Rational& p) {
  if (p < 0 || p > 1)
    throw std::domain_error("rho_from_p: agreement probability must lie in [0, 1]");
  return 2 * p - 1;
}

Rational p_psd_threshold(int n) {
  if (n < 2) throw std::domain_error("p_psd_threshold: n must be >= 2");
  return Rational(n - 2, 2 * (n - 1));
}

}  // namespace berncov
