#include <algorithm>
#include <stdexcept>

#include "minusdom/lp.hpp"

namespace minusdom {

namespace {

// Bounded-variable tableau. Columns: structurals, then one slack per row,
// then phase-1 artificials. Rows are kept as an equality system; a row may
// be negated once during setup so its starting basic variable is feasible.
struct Tableau {
  int m = 0;
  int cols = 0;
  std::vector<std::vector<Rational>> t;  // m x cols, equals B^-1 * M
  std::vector<Rational> d;               // reduced-cost row
  std::vector<Rational> beta;            // value of the basic variable per row
  std::vector<int> basis;                // column basic in each row
  std::vector<Rational> lb;
  std::vector<std::optional<Rational>> ub;
  std::vector<Rational> xval;            // bound value of nonbasic columns
  std::vector<char> is_basic;
  std::vector<char> at_upper;

  bool fixed(int j) const { return ub[j] && *ub[j] == lb[j]; }

  void pivot(int row, int col) {
    Rational piv = t[row][col];
    for (int j = 0; j < cols; ++j) t[row][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rational factor = t[i][col];
      for (int j = 0; j < cols; ++j)
        if (t[row][j] != 0) t[i][j] -= factor * t[row][j];
    }
    if (d[col] != 0) {
      Rational factor = d[col];
      for (int j = 0; j < cols; ++j)
        if (t[row][j] != 0) d[j] -= factor * t[row][j];
    }
  }

  // One simplex phase under Bland's rule: entering is the lowest-index
  // improving column, leaving the lowest-index blocker among the tightest.
  // Returns false when the objective is unbounded below.
  bool iterate() {
    while (true) {
      int enter = -1;
      int dir = 0;
      for (int j = 0; j < cols; ++j) {
        if (is_basic[j] || fixed(j)) continue;
        if (!at_upper[j] && d[j] < 0) {
          enter = j;
          dir = 1;
          break;
        }
        if (at_upper[j] && d[j] > 0) {
          enter = j;
          dir = -1;
          break;
        }
      }
      if (enter < 0) return true;

      // Ratio test: how far can the entering variable move?
      std::optional<Rational> theta;
      int block_row = -1;      // -1: none, -2: entering hits its other bound
      int block_var = -1;
      bool block_to_upper = false;
      if (ub[enter]) {
        theta = *ub[enter] - lb[enter];
        block_row = -2;
        block_var = enter;
      }
      for (int i = 0; i < m; ++i) {
        Rational g = t[i][enter] * dir;
        if (g == 0) continue;
        Rational limit;
        bool to_upper;
        if (g > 0) {
          limit = (beta[i] - lb[basis[i]]) / g;
          to_upper = false;
        } else {
          if (!ub[basis[i]]) continue;
          limit = (*ub[basis[i]] - beta[i]) / -g;
          to_upper = true;
        }
        if (!theta || limit < *theta || (limit == *theta && basis[i] < block_var)) {
          theta = limit;
          block_row = i;
          block_var = basis[i];
          block_to_upper = to_upper;
        }
      }
      if (!theta) return false;  // unbounded ray along the entering column

      for (int i = 0; i < m; ++i)
        if (t[i][enter] != 0) beta[i] -= t[i][enter] * dir * *theta;

      if (block_row == -2) {
        // Bound flip, no basis change.
        at_upper[enter] = !at_upper[enter];
        xval[enter] = at_upper[enter] ? *ub[enter] : lb[enter];
        continue;
      }

      int leave = basis[block_row];
      is_basic[leave] = 0;
      at_upper[leave] = block_to_upper;
      xval[leave] = block_to_upper ? *ub[leave] : lb[leave];
      basis[block_row] = enter;
      beta[block_row] = xval[enter] + dir * *theta;
      is_basic[enter] = 1;
      at_upper[enter] = 0;
      pivot(block_row, enter);
    }
  }

  // Reduced costs for the cost vector `c` (zero-padded) over the current
  // basis, plus the matching objective value of the current point.
  void load_costs(const std::vector<Rational>& c) {
    d.assign(cols, 0);
    for (int j = 0; j < cols; ++j)
      if (j < static_cast<int>(c.size())) d[j] = c[j];
    for (int i = 0; i < m; ++i) {
      int bj = basis[i];
      Rational cb = bj < static_cast<int>(c.size()) ? c[bj] : Rational(0);
      if (cb == 0) continue;
      for (int j = 0; j < cols; ++j)
        if (t[i][j] != 0) d[j] -= cb * t[i][j];
    }
  }

  Rational value_of(int j) const {
    if (is_basic[j]) {
      for (int i = 0; i < m; ++i)
        if (basis[i] == j) return beta[i];
    }
    return xval[j];
  }
};

void verify_optimal(const RationalLP& lp, const SimplexResult& res,
                    const std::vector<Rational>& reduced) {
  int n = lp.num_vars;
  // Primal feasibility.
  for (int j = 0; j < n; ++j) {
    if (res.primal[j] < lp.lower[j]) throw std::logic_error("primal below lower bound");
    if (lp.upper[j] && res.primal[j] > *lp.upper[j])
      throw std::logic_error("primal above upper bound");
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational activity = 0;
    for (int j = 0; j < n; ++j) activity += lp.rows[i].coeffs[j] * res.primal[j];
    if (activity < lp.rows[i].rhs) throw std::logic_error("primal violates a row");
  }
  // Dual feasibility: y1 >= 0 and A^T y1 <= c + y2.
  Rational dual_obj = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (res.dual_rows[i] < 0) throw std::logic_error("negative row dual");
    dual_obj += res.dual_rows[i] * lp.rows[i].rhs;
  }
  for (int j = 0; j < n; ++j) {
    Rational activity = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
      activity += res.dual_rows[i] * lp.rows[i].coeffs[j];
    if (activity > lp.objective[j] + res.dual_upper[j])
      throw std::logic_error("dual constraint violated");
    // Lower-bound dual is the positive part of the reduced cost.
    Rational lambda = reduced[j] > 0 ? reduced[j] : Rational(0);
    dual_obj += lp.lower[j] * lambda;
    if (lp.upper[j]) dual_obj -= *lp.upper[j] * res.dual_upper[j];
  }
  if (dual_obj != res.objective_value)
    throw std::logic_error("strong duality does not hold exactly");
}

}  // namespace

SimplexResult simplex_solve(const RationalLP& lp) {
  lp.validate();
  int n = lp.num_vars;
  int m = static_cast<int>(lp.rows.size());

  Tableau tab;
  tab.m = m;
  tab.cols = n + m;  // artificials appended on demand
  tab.t.assign(m, std::vector<Rational>(tab.cols, 0));
  tab.lb.assign(tab.cols, 0);
  tab.ub.assign(tab.cols, std::nullopt);
  tab.xval.assign(tab.cols, 0);
  tab.is_basic.assign(tab.cols, 0);
  tab.at_upper.assign(tab.cols, 0);
  tab.basis.resize(m);
  tab.beta.assign(m, 0);

  for (int j = 0; j < n; ++j) {
    tab.lb[j] = lp.lower[j];
    tab.ub[j] = lp.upper[j];
    // Start at the finite upper bound when there is one; for covering-style
    // rows that is feasible outright and skips phase 1.
    tab.at_upper[j] = lp.upper[j].has_value() && !(lp.upper[j] == lp.lower[j]);
    tab.xval[j] = tab.at_upper[j] ? *lp.upper[j] : lp.lower[j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab.t[i][j] = -lp.rows[i].coeffs[j];
    tab.t[i][n + i] = 1;
    tab.basis[i] = n + i;
    tab.is_basic[n + i] = 1;
    Rational activity = 0;
    for (int j = 0; j < n; ++j) activity += lp.rows[i].coeffs[j] * tab.xval[j];
    tab.beta[i] = activity - lp.rows[i].rhs;  // slack value
  }

  // Phase 1 if any slack starts negative.
  std::vector<int> art_rows;
  for (int i = 0; i < m; ++i)
    if (tab.beta[i] < 0) art_rows.push_back(i);
  int first_art = tab.cols;
  if (!art_rows.empty()) {
    for (int r : art_rows) {
      // Negate the row so the fresh artificial enters at a positive value.
      for (auto& cell : tab.t[r]) cell = -cell;
      tab.beta[r] = -tab.beta[r];
      int art = tab.cols++;
      tab.lb.push_back(0);
      tab.ub.push_back(std::nullopt);
      tab.xval.push_back(0);
      tab.is_basic.push_back(0);
      tab.at_upper.push_back(0);
      for (int i = 0; i < m; ++i) tab.t[i].push_back(i == r ? Rational(1) : Rational(0));
      tab.is_basic[tab.basis[r]] = 0;
      tab.at_upper[tab.basis[r]] = 0;
      tab.xval[tab.basis[r]] = 0;  // slack rests at its lower bound
      tab.basis[r] = art;
      tab.is_basic[art] = 1;
    }
    std::vector<Rational> phase1(tab.cols, 0);
    for (int j = first_art; j < tab.cols; ++j) phase1[j] = 1;
    tab.load_costs(phase1);
    if (!tab.iterate()) throw std::logic_error("phase 1 cannot be unbounded");
    Rational infeas = 0;
    for (int i = 0; i < m; ++i)
      if (tab.basis[i] >= first_art) infeas += tab.beta[i];
    if (infeas > 0) {
      SimplexResult res;
      res.status = SimplexResult::Status::Infeasible;
      return res;
    }
    // Pivot leftover artificials out where possible; fix them at zero.
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] < first_art) continue;
      for (int j = 0; j < first_art; ++j)
        if (!tab.is_basic[j] && tab.t[i][j] != 0) {
          int art = tab.basis[i];
          tab.is_basic[art] = 0;
          tab.at_upper[art] = 0;
          tab.xval[art] = 0;
          tab.basis[i] = j;
          tab.is_basic[j] = 1;
          tab.at_upper[j] = 0;
          tab.beta[i] = tab.xval[j];  // entering moves by zero
          tab.pivot(i, j);
          break;
        }
    }
    for (int j = first_art; j < tab.cols; ++j) tab.ub[j] = Rational(0);
  }

  std::vector<Rational> costs(lp.objective.begin(), lp.objective.end());
  tab.load_costs(costs);
  if (!tab.iterate()) {
    SimplexResult res;
    res.status = SimplexResult::Status::Unbounded;
    return res;
  }

  SimplexResult res;
  res.status = SimplexResult::Status::Optimal;
  res.primal.resize(n);
  for (int j = 0; j < n; ++j) res.primal[j] = tab.value_of(j);
  res.objective_value = 0;
  for (int j = 0; j < n; ++j) res.objective_value += lp.objective[j] * res.primal[j];
  res.dual_rows.resize(m);
  for (int i = 0; i < m; ++i) res.dual_rows[i] = tab.d[n + i];
  res.dual_upper.assign(n, 0);
  std::vector<Rational> reduced(n);
  for (int j = 0; j < n; ++j) {
    reduced[j] = tab.d[j];
    // Covers variables resting at their upper bound and fixed variables,
    // which never enter and may keep a negative reduced cost.
    if (!tab.is_basic[j] && lp.upper[j] && tab.d[j] < 0) res.dual_upper[j] = -tab.d[j];
  }
  verify_optimal(lp, res, reduced);
  return res;
}

}  // namespace minusdom
