#include "berncov/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace berncov {

namespace {
const BigInt kZero{0};
}

BinomialTable::BinomialTable(int n) {
  if (n < 0) throw std::domain_error("BinomialTable: n must be >= 0");
  rows_.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    auto& row = rows_[static_cast<std::size_t>(m)];
    row.assign(static_cast<std::size_t>(m) + 1, BigInt(1));
    for (int k = 1; k < m; ++k)
      row[static_cast<std::size_t>(k)] =
          rows_[m - 1][static_cast<std::size_t>(k) - 1] + rows_[m - 1][static_cast<std::size_t>(k)];
  }
}

const BigInt& BinomialTable::at(int m, int k) const {
  if (m < 0 || m > max_row())
    throw std::domain_error("BinomialTable::at: row out of range");
  if (k < 0 || k > m) return kZero;
  return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

BigInt binom(int m, int k) {
  if (m < 0) throw std::domain_error("binom: m must be >= 0");
  if (k < 0 || k > m) return 0;

  static std::mutex mutex;
  static BinomialTable table(64);
  std::lock_guard<std::mutex> lock(mutex);
  if (m > table.max_row()) table = BinomialTable(std::max(m, 2 * table.max_row()));
  return table.at(m, k);
}

BigInt pair_agreement_count(int n, int k) {
  if (n < 2) throw std::domain_error("pair_agreement_count: n must be >= 2");
  if (k < 0 || k > n) throw std::domain_error("pair_agreement_count: k out of range");
  return binom(n - 2, k) + binom(n - 2, k - 2);
}

Rational pair_agreement_ratio(int n, int k) {
  if (n < 2) throw std::domain_error("pair_agreement_ratio: n must be >= 2");
  if (k < 0 || k > n) throw std::domain_error("pair_agreement_ratio: k out of range");
  const BigInt complement = n - k;
  const BigInt agreeing = complement * (complement - 1) + BigInt(k) * (k - 1);
  return Rational(agreeing, BigInt(n) * (n - 1));
}

}  // namespace berncov
