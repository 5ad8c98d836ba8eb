#include "doctest.h"
#include "minusdom/generators.hpp"
#include "test_util.hpp"

using namespace minusdom;

TEST_CASE("generators are deterministic in the seed") {
  CHECK(write_graph(random_cograph(9, 42)) == write_graph(random_cograph(9, 42)));
  CHECK(write_graph(random_dh(9, 42)) == write_graph(random_dh(9, 42)));
  CHECK(write_graph(random_interval(9, 42)) == write_graph(random_interval(9, 42)));
  CHECK(write_graph(random_d_degenerate(9, 2, 42)) == write_graph(random_d_degenerate(9, 2, 42)));
  // Different seeds should usually differ.
  CHECK(write_graph(random_dh(9, 42)) != write_graph(random_dh(9, 43)));
}

TEST_CASE("complete multipartite") {
  Graph c4 = complete_multipartite({2, 2});
  CHECK(c4.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(complete_multipartite({3}).m() == 0);
  CHECK(complete_multipartite({1, 1, 1}).m() == 3);
  CHECK_THROWS_AS(complete_multipartite({0, 2}), std::invalid_argument);
}

TEST_CASE("single-vertex generators") {
  CHECK(random_interval(1, 7).n() == 1);
  CHECK(random_cograph(1, 7).n() == 1);
  CHECK_THROWS_AS(random_tree(0, 1), std::invalid_argument);
}

TEST_CASE("degenerate generator respects the bound") {
  for (unsigned seed = 1; seed <= 20; ++seed) {
    int d = 1 + seed % 3;
    Graph g = random_d_degenerate(10, d, seed);
    CHECK(degeneracy(g).d <= d);
  }
}

TEST_CASE("trees and blocks are connected") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    CHECK(random_tree(8, seed).is_connected());
    CHECK(random_block(8, seed).is_connected());
    CHECK(random_tree(8, seed).m() == 7);
  }
}
