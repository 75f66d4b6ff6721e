#pragma once

#include <optional>
#include <vector>

#include "berncov/eigen_types.hpp"
#include "berncov/rational.hpp"

namespace berncov {

/// Equality-form linear program over exact rationals:
///   minimize objective . x   subject to   equalities x = rhs,  x >= 0.
struct RationalLP {
  MatrixXq equalities;  // m x n
  VectorXq rhs;         // m
  VectorXq objective;   // n
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  Rational optimum;  // meaningful when status == optimal
  VectorXq vertex;   // basic optimal solution, empty otherwise
};

/// Two-phase primal simplex entirely in exact rational arithmetic. Pivots
/// use Dantzig's rule and fall back permanently to Bland's anti-cycling
/// rule when the objective stalls on a degenerate basis, so termination is
/// guaranteed. Infeasible / unbounded programs are reported through the
/// status, never as exceptions. Before returning an optimal result the
/// vertex is re-substituted into the original program; a failure there is
/// an internal bug and throws std::logic_error.
LpResult solve(const RationalLP& lp);

/// The (n+1)-variable program over count representations f(0..n) >= 0:
///   sum_k C(n,k) f(k) = 1,  sum_k C(n-1,k) f(k) = 1/2,
///   minimize sum_k pair_agreement_count(n,k) f(k).
/// Its optimum is the smallest agreement probability a fair-coin law on
/// {0,1}^n can have. Pass `pinned_agreement` to add the equality
/// sum_k pair_agreement_count(n,k) f(k) = p, turning the program into a
/// pure feasibility probe for a specific agreement value.
RationalLP build_symmetrized_program(
    int n, const std::optional<Rational>& pinned_agreement = std::nullopt);

/// The full 2^n-variable program over joint laws g >= 0 plus one agreement
/// variable t:
///   sum_x g(x) = 1;  sum_{x: x_i = 0} g(x) = 1/2 for each coordinate;
///   sum_{x: x_i = x_j} g(x) - t = 0 for each pair i < j;  minimize t.
/// Solving it checks that dropping exchangeability does not lower the
/// optimum. Capped at n <= 10 (exact pivoting cost).
RationalLP build_full_program(int n);

/// Per-n comparison of the LP optimum with the closed form (m-1)/(2m-1).
struct ThresholdCheck {
  int n;
  Rational closed_form;
  Rational lp_optimum;                       // symmetrized program
  std::optional<Rational> full_lp_optimum;   // set when the full program ran
  bool pass;
};

/// Solves the symmetrized program for every n in 2..n_max and compares with
/// the closed form; when `include_full` is set, also solves the full
/// program for n <= 10 and requires all three values to agree exactly.
std::vector<ThresholdCheck> verify_thresholds(int n_max, bool include_full = true);

}  // namespace berncov
