#include "minusdom/lp.hpp"

#include <sstream>
#include <stdexcept>

namespace minusdom {

void RationalLP::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  auto want = static_cast<std::size_t>(num_vars);
  if (objective.size() != want || lower.size() != want || upper.size() != want)
    throw std::invalid_argument("objective/bound vectors do not match num_vars");
  for (const auto& row : rows)
    if (row.coeffs.size() != want)
      throw std::invalid_argument("constraint row width does not match num_vars");
  for (int j = 0; j < num_vars; ++j)
    if (upper[j] && *upper[j] < lower[j])
      throw std::invalid_argument("upper bound below lower bound");
}

namespace {

std::string rat(const Rational& q) { return q.get_str(); }

}  // namespace

std::string emit_lp_text(const RationalLP& lp) {
  std::ostringstream out;
  auto term = [&](const Rational& coeff, int j, bool& first) {
    if (coeff == 0) return;
    if (!first) out << ' ';
    out << (coeff >= 0 ? "+ " : "- ") << rat(abs(coeff)) << " x" << j;
    first = false;
  };
  out << "min\n";
  bool first = true;
  for (int j = 0; j < lp.num_vars; ++j) term(lp.objective[j], j, first);
  if (first) out << "0";
  out << "\nst\n";
  for (const auto& row : lp.rows) {
    first = true;
    for (int j = 0; j < lp.num_vars; ++j) term(row.coeffs[j], j, first);
    if (first) out << "0";
    out << " >= " << rat(row.rhs) << '\n';
  }
  out << "bounds\n";
  for (int j = 0; j < lp.num_vars; ++j) {
    out << rat(lp.lower[j]) << " <= x" << j;
    if (lp.upper[j]) out << " <= " << rat(*lp.upper[j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace minusdom
