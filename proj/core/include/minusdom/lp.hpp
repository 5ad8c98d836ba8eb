#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace minusdom {

using Rational = mpq_class;

/// Linear program in the form
///   minimize c.x  subject to  A x >= b,  lower <= x <= upper,
/// with every entry an exact rational. Lower bounds must be finite; upper
/// bounds may be absent.
struct RationalLP {
  struct Row {
    std::vector<Rational> coeffs;  // dense, one per variable
    Rational rhs;
  };

  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Row> rows;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;

  void validate() const;  // throws std::invalid_argument on shape errors
};

struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded };

  Status status = Status::Infeasible;
  std::vector<Rational> primal;
  Rational objective_value = 0;
  /// Dual value per >= row (nonnegative at optimality).
  std::vector<Rational> dual_rows;
  /// Dual value per finite upper bound (zero for unbounded variables).
  std::vector<Rational> dual_upper;
};

/// Dense-tableau primal simplex over exact rationals with bounded variables
/// and Bland's anti-cycling rule. At an optimum the returned primal/dual
/// pair is verified exactly: primal feasible, dual feasible, objectives
/// equal. A failed verification is a bug and raises std::logic_error.
SimplexResult simplex_solve(const RationalLP& lp);

/// Plain text rendering: "min", the objective, "st", one constraint per
/// line, then the bounds; rationals print as p/q.
std::string emit_lp_text(const RationalLP& lp);

}  // namespace minusdom
