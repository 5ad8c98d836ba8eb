#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace minusdom {

/// A (3,2)-hitting-set instance: triples over a universe 0..universe_size-1,
/// each to be met in at least two elements.
struct HittingSetInstance {
  int universe_size = 0;
  std::vector<std::array<int, 3>> triples;

  /// Throws std::invalid_argument on out-of-range or repeated elements.
  void validate() const;
};

// File format: line 1 is "|U| |C|", then |C| lines of three distinct element
// ids. '#' comments and blank lines as in the graph format.
HittingSetInstance parse_hitting_set(const std::string& text);
HittingSetInstance parse_hitting_set(std::istream& in);
std::string write_hitting_set(const HittingSetInstance& inst);

}  // namespace minusdom
