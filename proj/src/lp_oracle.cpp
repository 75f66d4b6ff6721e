#include "berncov/lp_oracle.hpp"

#include <stdexcept>
#include <utility>

#include "berncov/combinatorics.hpp"
#include "berncov/constructors.hpp"

namespace berncov {

namespace {

// Dense simplex tableau. Rows 0..m-1 hold B^{-1}[A | I | b]; row m holds the
// reduced costs with -objective in the rightmost cell, so a pivot updates
// everything uniformly. Redundant rows may be dropped, so the rhs column
// index is fixed at construction.
class Tableau {
 public:
  Tableau(const MatrixXq& equalities, const VectorXq& rhs)
      : m_(equalities.rows()),
        n_(equalities.cols()),
        rhs_col_(equalities.cols() + equalities.rows()),
        t_(m_ + 1, rhs_col_ + 1) {
    t_.setZero();
    t_.topLeftCorner(m_, n_) = equalities;
    t_.col(rhs_col_).head(m_) = rhs;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (t_(i, rhs_col_) < 0) t_.row(i) = -t_.row(i);
      t_(i, n_ + i) = 1;  // artificial variable
      basis_.push_back(n_ + i);
    }
  }

  Eigen::Index rows() const { return m_; }
  const Rational& rhs(Eigen::Index i) const { return t_(i, rhs_col_); }
  Rational objective_value() const { return -t_(m_, rhs_col_); }

  // Phase-1 objective: the sum of artificials. With the artificial basis
  // B = I the reduced cost of column j is c_j - sum_i T(i,j), where c is 1
  // on artificial columns and 0 elsewhere (also 0 on the rhs cell, which
  // then accumulates -sum_i b_i, i.e. minus the starting objective).
  void load_phase1_costs() {
    for (Eigen::Index j = 0; j <= rhs_col_; ++j) {
      Rational reduced = (j >= n_ && j < rhs_col_) ? Rational(1) : Rational(0);
      for (Eigen::Index i = 0; i < m_; ++i) reduced -= t_(i, j);
      t_(m_, j) = reduced;
    }
  }

  // Reduced costs of an arbitrary structural objective over the current
  // basis: d_j = c_j - sum_i c_basis(i) T(i,j).
  void load_costs(const VectorXq& objective) {
    for (Eigen::Index j = 0; j <= rhs_col_; ++j) {
      Rational reduced = j < n_ ? objective(j) : Rational(0);
      for (Eigen::Index i = 0; i < m_; ++i) {
        const Eigen::Index basic = basis_[static_cast<std::size_t>(i)];
        if (basic < n_ && objective(basic) != 0)
          reduced -= objective(basic) * t_(i, j);
      }
      t_(m_, j) = reduced;
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Rational pivot_value = t_(row, col);
    t_.row(row) /= pivot_value;
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Rational factor = t_(i, col);
      t_.row(i) -= factor * t_.row(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // One pivot. Entering column: under Bland's rule the lowest-index
  // structural column with a negative reduced cost, otherwise the most
  // negative reduced cost (Dantzig). Leaving row: minimum ratio, ties by
  // lowest basic index. Artificial columns never re-enter. Returns false
  // once the current basis is optimal.
  struct Unbounded {};
  bool step(bool bland) {
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (t_(m_, j) >= 0) continue;
      if (bland) {
        entering = j;
        break;
      }
      if (entering < 0 || t_(m_, j) < t_(m_, entering)) entering = j;
    }
    if (entering < 0) return false;

    Eigen::Index leaving = -1;
    Rational best_ratio;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (t_(i, entering) <= 0) continue;
      const Rational ratio = rhs(i) / t_(i, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] <
                                      basis_[static_cast<std::size_t>(leaving)])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) throw Unbounded{};
    pivot(leaving, entering);
    return true;
  }

  // Dantzig pivoting is fast but may cycle on degenerate bases; Bland's
  // rule cannot cycle but crawls. Run Dantzig until the objective stalls
  // for too many consecutive pivots, then switch to Bland's rule for good,
  // which preserves the termination guarantee.
  void optimize() {
    const long stall_limit = 8 * (m_ + 1);
    long stalled = 0;
    bool bland = false;
    Rational last_objective = objective_value();
    while (step(bland)) {
      if (bland) continue;
      const Rational current = objective_value();
      if (current == last_objective) {
        if (++stalled >= stall_limit) bland = true;
      } else {
        stalled = 0;
        last_objective = current;
      }
    }
  }

  // After a successful phase 1 every artificial sits at value zero. Pivot
  // the basic ones onto structural columns (degenerate pivots, feasibility
  // is untouched); rows with no structural entry are redundant constraints
  // and get dropped.
  void evict_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) continue;
      Eigen::Index col = -1;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (t_(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        drop_row(i);
        --i;  // a different row now occupies this slot
      }
    }
  }

  VectorXq vertex() const {
    VectorXq x = VectorXq::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index basic = basis_[static_cast<std::size_t>(i)];
      if (basic < n_) x(basic) = rhs(i);
    }
    return x;
  }

 private:
  void drop_row(Eigen::Index row) {
    const Eigen::Index last = m_ - 1;
    if (row != last) {
      t_.row(row).swap(t_.row(last));
      std::swap(basis_[static_cast<std::size_t>(row)],
                basis_[static_cast<std::size_t>(last)]);
    }
    t_.row(last).swap(t_.row(m_));  // keep the cost row adjacent
    t_.conservativeResize(m_, Eigen::NoChange);
    basis_.pop_back();
    --m_;
  }

  Eigen::Index m_;
  Eigen::Index n_;
  Eigen::Index rhs_col_;
  MatrixXq t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpResult solve(const RationalLP& lp) {
  const Eigen::Index m = lp.equalities.rows();
  const Eigen::Index n = lp.equalities.cols();
  if (lp.rhs.size() != m || lp.objective.size() != n || n == 0 || m == 0)
    throw std::invalid_argument("solve: inconsistent LP dimensions");

  Tableau tableau(lp.equalities, lp.rhs);

  tableau.load_phase1_costs();
  try {
    tableau.optimize();
  } catch (const Tableau::Unbounded&) {
    throw std::logic_error("solve: phase 1 cannot be unbounded");
  }
  if (tableau.objective_value() != 0)
    return {LpStatus::infeasible, Rational(0), VectorXq()};
  tableau.evict_artificials();

  tableau.load_costs(lp.objective);
  try {
    tableau.optimize();
  } catch (const Tableau::Unbounded&) {
    return {LpStatus::unbounded, Rational(0), VectorXq()};
  }

  VectorXq vertex = tableau.vertex();

  // Certificate: the reported vertex must satisfy the *original* program.
  for (Eigen::Index j = 0; j < n; ++j)
    if (vertex(j) < 0) throw std::logic_error("solve: negative vertex entry");
  const VectorXq residual = lp.equalities * vertex - lp.rhs;
  for (Eigen::Index i = 0; i < m; ++i)
    if (residual(i) != 0) throw std::logic_error("solve: vertex violates equalities");
  const Rational optimum = lp.objective.dot(vertex);
  if (optimum != tableau.objective_value())
    throw std::logic_error("solve: tableau and vertex objectives disagree");

  return {LpStatus::optimal, optimum, std::move(vertex)};
}

RationalLP build_symmetrized_program(int n,
                                     const std::optional<Rational>& pinned_agreement) {
  if (n < 2) throw std::domain_error("build_symmetrized_program: n must be >= 2");
  const Eigen::Index rows = pinned_agreement ? 3 : 2;
  RationalLP lp;
  lp.equalities = MatrixXq::Zero(rows, n + 1);
  lp.rhs.resize(rows);
  lp.objective.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    lp.equalities(0, k) = Rational(binom(n, k));
    lp.equalities(1, k) = Rational(binom(n - 1, k));
    lp.objective(k) = Rational(pair_agreement_count(n, k));
    if (pinned_agreement) lp.equalities(2, k) = lp.objective(k);
  }
  lp.rhs(0) = 1;
  lp.rhs(1) = Rational(1, 2);
  if (pinned_agreement) lp.rhs(2) = *pinned_agreement;
  return lp;
}

RationalLP build_full_program(int n) {
  if (n < 2 || n > 10)
    throw std::domain_error("build_full_program: n must lie in [2, 10]");
  const Eigen::Index vectors = Eigen::Index{1} << n;
  const Eigen::Index t_col = vectors;  // the common agreement value
  const Eigen::Index rows = 1 + n + n * (n - 1) / 2;

  RationalLP lp;
  lp.equalities = MatrixXq::Zero(rows, vectors + 1);
  lp.rhs = VectorXq::Zero(rows);
  lp.objective = VectorXq::Zero(vectors + 1);
  lp.objective(t_col) = 1;

  for (Eigen::Index x = 0; x < vectors; ++x) lp.equalities(0, x) = 1;
  lp.rhs(0) = 1;

  for (int i = 0; i < n; ++i) {
    for (Eigen::Index x = 0; x < vectors; ++x)
      if (((x >> i) & 1) == 0) lp.equalities(1 + i, x) = 1;
    lp.rhs(1 + i) = Rational(1, 2);
  }

  Eigen::Index row = 1 + n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++row) {
      for (Eigen::Index x = 0; x < vectors; ++x)
        if (((x >> i) & 1) == ((x >> j) & 1)) lp.equalities(row, x) = 1;
      lp.equalities(row, t_col) = -1;
    }
  }
  return lp;
}

std::vector<ThresholdCheck> verify_thresholds(int n_max, bool include_full) {
  if (n_max < 2) throw std::domain_error("verify_thresholds: n_max must be >= 2");
  std::vector<ThresholdCheck> checks;
  checks.reserve(static_cast<std::size_t>(n_max) - 1);
  for (int n = 2; n <= n_max; ++n) {
    ThresholdCheck check;
    check.n = n;
    check.closed_form = p_min_binary(n);

    const LpResult symmetrized = solve(build_symmetrized_program(n));
    check.pass = symmetrized.status == LpStatus::optimal &&
                 symmetrized.optimum == check.closed_form;
    check.lp_optimum = symmetrized.optimum;

    if (include_full && n <= 10) {
      const LpResult full = solve(build_full_program(n));
      check.full_lp_optimum = full.optimum;
      check.pass = check.pass && full.status == LpStatus::optimal &&
                   full.optimum == check.closed_form;
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace berncov
