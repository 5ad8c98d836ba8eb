#pragma once

#include <cstdint>
#include <vector>

#include "minusdom/graph.hpp"

namespace minusdom {

/// Seeded generators for the graph classes handled by the solvers. All of
/// them are bit-exact functions of their arguments: the same seed always
/// yields the same graph, on every platform.
Graph random_cograph(int n, std::uint32_t seed);
Graph random_dh(int n, std::uint32_t seed);
Graph random_interval(int n, std::uint32_t seed);
Graph random_d_degenerate(int n, int d, std::uint32_t seed);
Graph random_tree(int n, std::uint32_t seed);
Graph random_block(int n, std::uint32_t seed);
Graph complete_multipartite(const std::vector<int>& part_sizes);

}  // namespace minusdom
