#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ic/rational.hpp"

namespace ic {

enum class Relation { LessEq, GreaterEq, Equal };

enum class LpStatus { Optimal, Infeasible, Unbounded };

// Minimize c.x subject to dense linear constraints, x >= 0, and optional
// per-variable upper bounds. Variables are 1-based like everything else.
class LpProblem {
 public:
  explicit LpProblem(int num_vars);

  int num_vars() const { return n_; }
  int num_constraints() const { return static_cast<int>(rows_.size()); }

  void set_objective(std::vector<Rational> c);
  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  void set_upper_bound(int var, Rational ub);

  const std::vector<Rational>& objective() const { return c_; }

  struct Row {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
  };
  const std::vector<Row>& constraints() const { return rows_; }
  const std::vector<std::optional<Rational>>& upper_bounds() const { return ub_; }

 private:
  int n_;
  std::vector<Rational> c_;
  std::vector<Row> rows_;
  std::vector<std::optional<Rational>> ub_;
};

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rational objective;
  std::vector<Rational> x;  // structural variables, empty unless Optimal

  // Certificate: one multiplier per constraint (>= rows nonnegative, <= rows
  // nonpositive, = rows free) plus one per upper bound the solver had to
  // enforce. Verified exactly against the primal before returning; a solution
  // with status Optimal always carries a checked certificate.
  std::vector<Rational> dual;
  std::vector<std::pair<int, Rational>> upper_bound_duals;  // (var, multiplier)
  bool dual_verified = false;
};

// Exact two-phase dense simplex with Bland's rule; no floating point anywhere.
// Upper bounds are enforced lazily: solve, add any violated bound as a row,
// repeat. Throws Error only on malformed input or an internal certificate
// failure (which would be a bug, never a property of the instance).
LpSolution lp_solve(const LpProblem& p);

}  // namespace ic
