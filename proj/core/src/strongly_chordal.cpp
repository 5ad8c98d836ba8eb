#include "minusdom/strongly_chordal.hpp"

#include <algorithm>
#include <sstream>

namespace minusdom {

namespace {

struct Bitset {
  std::vector<std::uint64_t> words;

  explicit Bitset(int n) : words((n + 63) / 64, 0) {}
  void set(int i) { words[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { words[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return words[i >> 6] >> (i & 63) & 1; }
  bool contains(const Bitset& other) const {
    for (std::size_t w = 0; w < words.size(); ++w)
      if (other.words[w] & ~words[w]) return false;
    return true;
  }
};

}  // namespace

SimpleEliminationResult simple_elimination_ordering(const Graph& g) {
  int n = g.n();
  SimpleEliminationResult res;
  std::vector<Bitset> closed(n, Bitset(n));
  std::vector<char> active(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) {
    closed[v].set(v);
    for (int u : g.neighbors(v)) closed[v].set(u);
    deg[v] = g.degree(v);
  }

  auto is_simple = [&](int v) {
    std::vector<int> nbrs;
    for (int u : g.neighbors(v))
      if (active[u]) nbrs.push_back(u);
    // Clique: every neighbor's closed neighborhood covers all neighbors.
    for (int u : nbrs)
      for (int w : nbrs)
        if (u < w && !closed[u].test(w)) return false;
    // Chain: sort by degree, then neighbors must nest.
    std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
      return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
    });
    for (std::size_t i = 0; i + 1 < nbrs.size(); ++i)
      if (!closed[nbrs[i + 1]].contains(closed[nbrs[i]])) return false;
    return true;
  };

  std::vector<int> order;
  for (int round = 0; round < n; ++round) {
    int found = -1;
    for (int v = 0; v < n && found < 0; ++v)
      if (active[v] && is_simple(v)) found = v;
    if (found < 0) {
      for (int v = 0; v < n; ++v)
        if (active[v]) res.stuck.push_back(v);
      return res;
    }
    order.push_back(found);
    active[found] = 0;
    for (int u : g.neighbors(found))
      if (active[u]) {
        closed[u].reset(found);
        --deg[u];
      }
  }
  res.ordering = std::move(order);
  return res;
}

bool is_strongly_chordal(const Graph& g) { return simple_elimination_ordering(g).accepted(); }

RationalLP build_lp(const Graph& g) {
  RationalLP lp;
  lp.num_vars = g.n();
  lp.objective.assign(g.n(), 1);
  lp.lower.assign(g.n(), 0);
  lp.upper.assign(g.n(), Rational(2));
  for (int k = 0; k < g.n(); ++k) {
    RationalLP::Row row;
    row.coeffs.assign(g.n(), 0);
    row.coeffs[k] = 1;
    for (int u : g.neighbors(k)) row.coeffs[u] = 1;
    row.rhs = g.degree(k) + 2;  // |N[k]| + 1
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

SlacknessReport check_complementary_slackness(const RationalLP& lp, const SimplexResult& res) {
  auto fail = [](int cond, std::string detail) {
    return SlacknessReport{false, cond, std::move(detail)};
  };
  int n = lp.num_vars;
  for (std::size_t k = 0; k < lp.rows.size(); ++k) {
    if (res.dual_rows[k] <= 0) continue;
    Rational activity = 0;
    for (int j = 0; j < n; ++j) activity += lp.rows[k].coeffs[j] * res.primal[j];
    if (activity != lp.rows[k].rhs)
      return fail(1, "row " + std::to_string(k) + " has positive dual but slack");
  }
  for (int k = 0; k < n; ++k) {
    Rational col_activity = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i)
      col_activity += res.dual_rows[i] * lp.rows[i].coeffs[k];
    if (col_activity > lp.objective[k]) {
      if (!lp.upper[k] || res.primal[k] != *lp.upper[k])
        return fail(2, "column " + std::to_string(k) +
                           " is overtight but the variable is not at its cap");
    }
    if (res.primal[k] > lp.lower[k] && col_activity < lp.objective[k])
      return fail(3, "variable " + std::to_string(k) +
                         " is above its lower bound with an uncovered column");
    Rational expected = col_activity - lp.objective[k];
    if (expected < 0) expected = 0;
    if (res.dual_upper[k] != expected)
      return fail(4, "upper-bound dual of variable " + std::to_string(k) +
                         " is not max(0, activity - cost)");
  }
  return {};
}

namespace {

// The closed-neighborhood polytope is guaranteed to have an integral point
// of optimal value, but its optimal face can still own fractional vertices,
// and the simplex may stop at one. Walk to an integral optimum by pinning
// one fractional coordinate at a time: one of floor/ceiling must preserve
// the value, or no integral optimum exists at all.
SimplexResult purify_integral(const RationalLP& lp, const SimplexResult& base) {
  RationalLP work = lp;
  SimplexResult cur = base;
  int guard = 0;
  while (true) {
    int frac = -1;
    for (int j = 0; j < lp.num_vars && frac < 0; ++j)
      if (cur.primal[j].get_den() != 1) frac = j;
    if (frac < 0) break;
    if (++guard > 4 * lp.num_vars + 8)
      throw IntegralityError("integral purification did not converge", emit_lp_text(lp));
    Rational floor_value(cur.primal[frac].get_num() / cur.primal[frac].get_den());
    RationalLP trial = work;
    trial.upper[frac] = floor_value;
    SimplexResult attempt = simplex_solve(trial);
    if (attempt.status != SimplexResult::Status::Optimal ||
        attempt.objective_value != base.objective_value) {
      trial = work;
      trial.lower[frac] = floor_value + 1;
      attempt = simplex_solve(trial);
      if (attempt.status != SimplexResult::Status::Optimal ||
          attempt.objective_value != base.objective_value) {
        std::ostringstream what;
        what << "no integral optimum preserves the LP value at variable " << frac;
        throw IntegralityError(what.str(),
                               emit_lp_text(lp) + emit_certificate_text(lp, base));
      }
    }
    work = trial;
    cur = attempt;
  }
  // The purified primal is optimal for the original program, so it forms an
  // optimal pair with the original duals.
  SimplexResult res = base;
  res.primal = cur.primal;
  return res;
}

}  // namespace

StronglyChordalSolve gamma_minus_strongly_chordal(const Graph& g) {
  auto elim = simple_elimination_ordering(g);
  if (!elim.accepted())
    throw NotInClassError("no simple vertex in the residual graph", elim.stuck);

  StronglyChordalSolve solve;
  solve.ordering = *elim.ordering;
  solve.lp = build_lp(g);
  solve.simplex = simplex_solve(solve.lp);
  if (solve.simplex.status != SimplexResult::Status::Optimal)
    throw std::logic_error("covering LP must be feasible and bounded");
  solve.simplex = purify_integral(solve.lp, solve.simplex);

  std::vector<int8_t> values(g.n());
  for (int j = 0; j < g.n(); ++j) {
    const Rational& z = solve.simplex.primal[j];
    if (z.get_den() != 1 || z < 0 || z > 2) {
      std::ostringstream what;
      what << "fractional or out-of-range LP optimum at variable " << j << ": " << z.get_str();
      throw IntegralityError(what.str(),
                             emit_lp_text(solve.lp) + emit_certificate_text(solve.lp, solve.simplex));
    }
    values[j] = static_cast<int8_t>(z.get_num().get_si() - 1);
  }
  solve.witness = MinusFunction(values);
  solve.gamma_minus =
      static_cast<int>(solve.simplex.objective_value.get_num().get_si()) - g.n();

  auto rep = validate_minus_function(g, solve.witness);
  if (!rep.valid || solve.witness.weight() != solve.gamma_minus)
    throw std::logic_error("LP witness failed validation");
  return solve;
}

std::string emit_certificate_text(const RationalLP& lp, const SimplexResult& res) {
  std::ostringstream out;
  out << "status ";
  switch (res.status) {
    case SimplexResult::Status::Optimal:
      out << "optimal";
      break;
    case SimplexResult::Status::Infeasible:
      out << "infeasible";
      break;
    case SimplexResult::Status::Unbounded:
      out << "unbounded";
      break;
  }
  out << '\n';
  if (res.status != SimplexResult::Status::Optimal) return out.str();
  out << "objective " << res.objective_value.get_str() << '\n';
  out << "primal";
  for (const auto& z : res.primal) out << ' ' << z.get_str();
  out << "\ndual_rows";
  for (const auto& y : res.dual_rows) out << ' ' << y.get_str();
  out << "\ndual_upper";
  for (const auto& y : res.dual_upper) out << ' ' << y.get_str();
  out << '\n';
  auto slack = check_complementary_slackness(lp, res);
  out << "complementary_slackness " << (slack.ok ? "ok" : "violated") << '\n';
  if (!slack.ok) out << "violated_condition " << slack.violated_condition << '\n';
  return out.str();
}

}  // namespace minusdom
