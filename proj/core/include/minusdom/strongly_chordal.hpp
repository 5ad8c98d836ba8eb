#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minusdom/cotree.hpp"
#include "minusdom/graph.hpp"
#include "minusdom/lp.hpp"

namespace minusdom {

struct SimpleEliminationResult {
  /// Removal order over all vertices when the graph is strongly chordal.
  std::optional<std::vector<int>> ordering;
  /// Residual vertices without a simple vertex otherwise.
  std::vector<int> stuck;
  bool accepted() const { return ordering.has_value(); }
};

/// Repeatedly removes a simple vertex: one whose closed neighborhood is a
/// clique and whose neighbors' closed neighborhoods form an inclusion
/// chain. Succeeds exactly on strongly chordal graphs.
SimpleEliminationResult simple_elimination_ordering(const Graph& g);

bool is_strongly_chordal(const Graph& g);

/// The covering program: minimize sum z_i subject to z(N[k]) >= |N[k]| + 1
/// for every vertex k and 0 <= z_i <= 2.
RationalLP build_lp(const Graph& g);

/// Raised when the LP optimum is not the integral vector the closed
/// neighborhood structure guarantees; carries a dump for triage.
class IntegralityError : public std::logic_error {
 public:
  IntegralityError(std::string what, std::string dump)
      : std::logic_error(std::move(what)), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

struct SlacknessReport {
  bool ok = true;
  /// 1: positive row dual with slack row; 2: overtight column without z at
  /// its cap; 3: interior z with uncovered column; 4: upper-bound dual
  /// identity violated. 0 when ok.
  int violated_condition = 0;
  std::string detail;
};

/// Verifies the optimal pair: y1_k > 0 implies row k is tight; column
/// activity above the cost forces z_k = 2; z_k > 0 forces column activity
/// at least the cost; and y2 equals the positive part of activity - cost.
SlacknessReport check_complementary_slackness(const RationalLP& lp, const SimplexResult& res);

struct StronglyChordalSolve {
  int gamma_minus = 0;
  MinusFunction witness;
  std::vector<int> ordering;
  RationalLP lp;
  SimplexResult simplex;
};

/// Certifies class membership, solves the LP exactly, asserts the optimum
/// is integral with entries in {0,1,2}, and maps z* - 1 back to the minus
/// assignment. Throws NotInClassError or IntegralityError.
StronglyChordalSolve gamma_minus_strongly_chordal(const Graph& g);

/// Primal/dual/slackness report for --emit-certificate.
std::string emit_certificate_text(const RationalLP& lp, const SimplexResult& res);

}  // namespace minusdom
