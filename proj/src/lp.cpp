#include "ic/lp.hpp"

#include <algorithm>

#include "ic/error.hpp"

namespace ic {

LpProblem::LpProblem(int num_vars) : n_(num_vars), c_(num_vars), ub_(num_vars) {
  if (num_vars < 1) throw Error("lp: need at least one variable");
}

void LpProblem::set_objective(std::vector<Rational> c) {
  if (static_cast<int>(c.size()) != n_) throw Error("lp: objective size mismatch");
  c_ = std::move(c);
}

void LpProblem::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != n_) throw Error("lp: constraint size mismatch");
  rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LpProblem::set_upper_bound(int var, Rational ub) {
  if (var < 1 || var > n_) throw Error("lp: variable out of range");
  if (ub < Rational(0)) throw Error("lp: negative upper bound");
  ub_[var - 1] = std::move(ub);
}

namespace {

struct SimplexOut {
  LpStatus status = LpStatus::Optimal;
  std::vector<Rational> x;  // structural values
  std::vector<Rational> y;  // per input row, caller's orientation
};

// Dense two-phase tableau simplex, Bland's rule throughout (first negative
// reduced cost enters; smallest basic index leaves on ratio ties), which
// rules out cycling. Everything is exact.
class Simplex {
 public:
  Simplex(int nstruct, const std::vector<LpProblem::Row>& rows,
          const std::vector<Rational>& cost)
      : nstruct_(nstruct), cost_(cost) {
    norm_ = rows;
    flip_.assign(rows.size(), false);
    for (std::size_t j = 0; j < norm_.size(); ++j) {
      if (norm_[j].rhs < Rational(0)) {
        flip_[j] = true;
        norm_[j].rhs = -norm_[j].rhs;
        for (Rational& v : norm_[j].coeffs) v = -v;
        if (norm_[j].rel == Relation::LessEq) norm_[j].rel = Relation::GreaterEq;
        else if (norm_[j].rel == Relation::GreaterEq) norm_[j].rel = Relation::LessEq;
      }
    }
    for (const auto& row : norm_) {
      if (row.rel != Relation::Equal) slack_row_.push_back(static_cast<int>(&row - norm_.data()));
      if (row.rel != Relation::LessEq) art_row_.push_back(static_cast<int>(&row - norm_.data()));
    }
    build_tableau();
  }

  SimplexOut run() {
    SimplexOut out;
    if (!phase1()) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    sweep_artificials();
    if (!phase2()) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.x.assign(nstruct_, Rational(0));
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (basis_[r] < nstruct_) out.x[basis_[r]] = a_[r][rhs_col()];
    }
    out.y = duals();
    return out;
  }

 private:
  int nstruct_;
  std::vector<Rational> cost_;           // structural costs
  std::vector<LpProblem::Row> norm_;     // rhs-nonnegative copy
  std::vector<bool> flip_;
  std::vector<int> slack_row_;           // slack column -> owning row
  std::vector<int> art_row_;             // artificial column -> owning row

  std::vector<std::vector<Rational>> a_;  // active rows x (ncols+1)
  std::vector<Rational> z_;               // reduced-cost row, ncols+1
  std::vector<int> basis_;                // active row -> column
  std::vector<int> orig_;                 // active row -> input row index

  int ncols() const {
    return nstruct_ + static_cast<int>(slack_row_.size() + art_row_.size());
  }
  int rhs_col() const { return ncols(); }
  bool is_art(int col) const { return col >= nstruct_ + static_cast<int>(slack_row_.size()); }

  void build_tableau() {
    const int m = static_cast<int>(norm_.size());
    a_.assign(m, std::vector<Rational>(ncols() + 1, Rational(0)));
    basis_.assign(m, -1);
    orig_.resize(m);
    for (int r = 0; r < m; ++r) {
      orig_[r] = r;
      for (int j = 0; j < nstruct_; ++j) a_[r][j] = norm_[r].coeffs[j];
      a_[r][rhs_col()] = norm_[r].rhs;
    }
    for (std::size_t s = 0; s < slack_row_.size(); ++s) {
      int r = slack_row_[s];
      int col = nstruct_ + static_cast<int>(s);
      a_[r][col] = norm_[r].rel == Relation::LessEq ? Rational(1) : Rational(-1);
      if (norm_[r].rel == Relation::LessEq) basis_[r] = col;
    }
    for (std::size_t t = 0; t < art_row_.size(); ++t) {
      int r = art_row_[t];
      int col = nstruct_ + static_cast<int>(slack_row_.size() + t);
      a_[r][col] = Rational(1);
      basis_[r] = col;
    }
  }

  void pivot(int prow, int pcol) {
    Rational inv = Rational(1) / a_[prow][pcol];
    for (Rational& v : a_[prow]) v = v * inv;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (static_cast<int>(r) == prow || a_[r][pcol].is_zero()) continue;
      Rational f = a_[r][pcol];
      for (int j = 0; j <= ncols(); ++j) a_[r][j] -= f * a_[prow][j];
    }
    if (!z_[pcol].is_zero()) {
      Rational f = z_[pcol];
      for (int j = 0; j <= ncols(); ++j) z_[j] -= f * a_[prow][j];
    }
    basis_[prow] = pcol;
  }

  // Bland iterations until optimal (true) or an unbounded ray (false).
  bool iterate(bool ban_artificials) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < ncols(); ++j) {
        if (ban_artificials && is_art(j)) continue;
        if (z_[j] < Rational(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (a_[r][enter] > Rational(0)) {
          Rational ratio = a_[r][rhs_col()] / a_[r][enter];
          if (leave < 0 || ratio < best ||
              (ratio == best && basis_[r] < basis_[leave])) {
            leave = static_cast<int>(r);
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  bool phase1() {
    z_.assign(ncols() + 1, Rational(0));
    if (art_row_.empty()) return true;
    for (std::size_t t = 0; t < art_row_.size(); ++t) {
      z_[nstruct_ + static_cast<int>(slack_row_.size() + t)] = Rational(1);
    }
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (is_art(basis_[r])) {
        for (int j = 0; j <= ncols(); ++j) z_[j] -= a_[r][j];
      }
    }
    iterate(false);  // min of a sum of nonnegative variables cannot be unbounded
    return z_[rhs_col()].is_zero();
  }

  // After a feasible phase 1, no artificial may stay basic: pivot each one
  // out on any real column, or drop its row as redundant.
  void sweep_artificials() {
    for (std::size_t r = 0; r < a_.size();) {
      if (!is_art(basis_[r])) {
        ++r;
        continue;
      }
      int col = -1;
      for (int j = 0; j < nstruct_ + static_cast<int>(slack_row_.size()); ++j) {
        if (!a_[r][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(static_cast<int>(r), col);
        ++r;
      } else {
        a_.erase(a_.begin() + r);
        basis_.erase(basis_.begin() + r);
        orig_.erase(orig_.begin() + r);
      }
    }
  }

  bool phase2() {
    z_.assign(ncols() + 1, Rational(0));
    for (int j = 0; j < nstruct_; ++j) z_[j] = cost_[j];
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (basis_[r] < nstruct_ && !cost_[basis_[r]].is_zero()) {
        Rational f = cost_[basis_[r]];
        for (int j = 0; j <= ncols(); ++j) z_[j] -= f * a_[r][j];
      }
    }
    return iterate(true);
  }

  // Column of the *initial* tableau, restricted to the active rows.
  Rational initial_entry(int active_row, int col) const {
    int r = orig_[active_row];
    if (col < nstruct_) return norm_[r].coeffs[col];
    int s = col - nstruct_;
    if (s < static_cast<int>(slack_row_.size())) {
      if (slack_row_[s] != r) return Rational(0);
      return norm_[r].rel == Relation::LessEq ? Rational(1) : Rational(-1);
    }
    int t = s - static_cast<int>(slack_row_.size());
    return art_row_[t] == r ? Rational(1) : Rational(0);
  }

  // Multipliers from the final basis: solve transpose(B) y = c_B exactly.
  std::vector<Rational> duals() const {
    const int k = static_cast<int>(a_.size());
    std::vector<std::vector<Rational>> s(k, std::vector<Rational>(k + 1, Rational(0)));
    for (int col = 0; col < k; ++col) {
      for (int row = 0; row < k; ++row) s[col][row] = initial_entry(row, basis_[col]);
      s[col][k] = basis_[col] < nstruct_ ? cost_[basis_[col]] : Rational(0);
    }
    // Plain elimination; the basis matrix is invertible by construction.
    std::vector<int> where(k, -1);
    int prow = 0;
    for (int pc = 0; pc < k && prow < k; ++pc) {
      int sel = -1;
      for (int r = prow; r < k; ++r) {
        if (!s[r][pc].is_zero()) {
          sel = r;
          break;
        }
      }
      if (sel < 0) continue;
      std::swap(s[sel], s[prow]);
      Rational inv = Rational(1) / s[prow][pc];
      for (auto& v : s[prow]) v = v * inv;
      for (int r = 0; r < k; ++r) {
        if (r == prow || s[r][pc].is_zero()) continue;
        Rational f = s[r][pc];
        for (int j = 0; j <= k; ++j) s[r][j] -= f * s[prow][j];
      }
      where[pc] = prow;
      ++prow;
    }
    std::vector<Rational> y_active(k, Rational(0));
    for (int j = 0; j < k; ++j) {
      if (where[j] >= 0) y_active[j] = s[where[j]][k];
    }
    std::vector<Rational> y(norm_.size(), Rational(0));
    for (int r = 0; r < k; ++r) y[orig_[r]] = flip_[orig_[r]] ? -y_active[r] : y_active[r];
    return y;
  }
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc;
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
  return acc;
}

// Exact certificate check: primal feasibility, dual sign pattern, nonnegative
// reduced costs, and matching objective values. Any failure is an internal
// bug, so it throws instead of degrading quietly.
void verify_certificate(const LpProblem& p, const LpSolution& sol,
                        const std::vector<LpProblem::Row>& ub_rows,
                        const std::vector<int>& ub_vars,
                        const std::vector<Rational>& ub_duals) {
  const int n = p.num_vars();
  for (int j = 0; j < n; ++j) {
    if (sol.x[j] < Rational(0)) throw Error("lp: negative variable in solution");
    if (p.upper_bounds()[j] && sol.x[j] > *p.upper_bounds()[j]) {
      throw Error("lp: upper bound violated in solution");
    }
  }
  Rational dual_value;
  for (std::size_t i = 0; i < p.constraints().size(); ++i) {
    const auto& row = p.constraints()[i];
    Rational lhs = dot(row.coeffs, sol.x);
    const Rational& y = sol.dual[i];
    switch (row.rel) {
      case Relation::LessEq:
        if (lhs > row.rhs) throw Error("lp: <= row violated");
        if (y > Rational(0)) throw Error("lp: <= row has positive multiplier");
        break;
      case Relation::GreaterEq:
        if (lhs < row.rhs) throw Error("lp: >= row violated");
        if (y < Rational(0)) throw Error("lp: >= row has negative multiplier");
        break;
      case Relation::Equal:
        if (lhs != row.rhs) throw Error("lp: = row violated");
        break;
    }
    dual_value += y * row.rhs;
  }
  for (std::size_t i = 0; i < ub_rows.size(); ++i) {
    if (ub_duals[i] > Rational(0)) throw Error("lp: bound row has positive multiplier");
    dual_value += ub_duals[i] * ub_rows[i].rhs;
  }
  for (int j = 0; j < n; ++j) {
    Rational reduced = p.objective()[j];
    for (std::size_t i = 0; i < p.constraints().size(); ++i) {
      reduced -= sol.dual[i] * p.constraints()[i].coeffs[j];
    }
    for (std::size_t i = 0; i < ub_rows.size(); ++i) {
      if (ub_vars[i] == j + 1) reduced -= ub_duals[i];
    }
    if (reduced < Rational(0)) throw Error("lp: negative reduced cost in certificate");
  }
  if (dual_value != sol.objective) throw Error("lp: duality gap in certificate");
}

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
  std::vector<LpProblem::Row> rows = p.constraints();
  std::vector<int> ub_vars;  // variable owning each appended bound row
  std::vector<bool> materialized(p.num_vars(), false);

  while (true) {
    Simplex solver(p.num_vars(), rows, p.objective());
    SimplexOut out = solver.run();
    if (out.status == LpStatus::Infeasible) {
      LpSolution sol;
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    bool added = false;
    if (out.status == LpStatus::Unbounded) {
      // A ray can only be cut off by bounds not yet in the tableau.
      for (int v = 1; v <= p.num_vars(); ++v) {
        if (p.upper_bounds()[v - 1] && !materialized[v - 1]) {
          std::vector<Rational> coeffs(p.num_vars(), Rational(0));
          coeffs[v - 1] = Rational(1);
          rows.push_back({std::move(coeffs), Relation::LessEq, *p.upper_bounds()[v - 1]});
          ub_vars.push_back(v);
          materialized[v - 1] = true;
          added = true;
        }
      }
      if (!added) {
        LpSolution sol;
        sol.status = LpStatus::Unbounded;
        return sol;
      }
      continue;
    }
    for (int v = 1; v <= p.num_vars(); ++v) {
      if (p.upper_bounds()[v - 1] && !materialized[v - 1] &&
          out.x[v - 1] > *p.upper_bounds()[v - 1]) {
        std::vector<Rational> coeffs(p.num_vars(), Rational(0));
        coeffs[v - 1] = Rational(1);
        rows.push_back({std::move(coeffs), Relation::LessEq, *p.upper_bounds()[v - 1]});
        ub_vars.push_back(v);
        materialized[v - 1] = true;
        added = true;
      }
    }
    if (added) continue;

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x = out.x;
    sol.objective = dot(p.objective(), sol.x);
    const std::size_t nexp = p.constraints().size();
    sol.dual.assign(out.y.begin(), out.y.begin() + nexp);
    std::vector<LpProblem::Row> ub_rows(rows.begin() + nexp, rows.end());
    std::vector<Rational> ub_duals(out.y.begin() + nexp, out.y.end());
    for (std::size_t i = 0; i < ub_vars.size(); ++i) {
      sol.upper_bound_duals.emplace_back(ub_vars[i], ub_duals[i]);
    }
    verify_certificate(p, sol, ub_rows, ub_vars, ub_duals);
    sol.dual_verified = true;
    return sol;
  }
}

}  // namespace ic
