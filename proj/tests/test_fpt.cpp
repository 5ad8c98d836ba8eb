#include <random>

#include "doctest.h"
#include "minusdom/degenerate_fpt.hpp"
#include "minusdom/generators.hpp"
#include "minusdom/oracle.hpp"
#include "minusdom/reductions.hpp"
#include "test_util.hpp"

using namespace minusdom;

TEST_CASE("compute_omega") {
  // Star on seven vertices, all black, k = 1: only the center covers
  // everything; each leaf covers two of seven.
  Graph star = testutil::star(6);
  auto omega = compute_omega(star, testutil::all_vertices(star), 1);
  CHECK(omega.vertices == std::vector<int>{0});
  CHECK(omega.vertices.size() <= static_cast<std::size_t>((4 * 1 + 2) * 1));

  Graph k2 = testutil::complete(2);
  CHECK(compute_omega(k2, {0, 1}, 2).vertices == std::vector<int>{0, 1});
  CHECK_THROWS_AS(compute_omega(k2, {0, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(compute_omega(k2, {}, 1), std::invalid_argument);
}

TEST_CASE("kernelize") {
  // Star with 99 leaves, black center, k = 1: all leaves share the single
  // trace and collapse to one representative.
  Graph star = testutil::star(99);
  auto kern = kernelize(star, {0}, {}, 1);
  CHECK(kern.kept == std::vector<int>{0, 1});
  CHECK(kern.h.n() == 2);
  CHECK(kern.h.m() == 1);

  // No owners at all: everything shares the empty trace; keep k vertices.
  auto empty_owners = kernelize(testutil::path(5), {}, {}, 2);
  CHECK(empty_owners.kept == std::vector<int>{0, 1});
  CHECK(empty_owners.classes.size() == 1);

  // Far component collapses onto one representative.
  Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  auto kern2 = kernelize(two_k2, {0, 1}, {}, 1);
  CHECK(kern2.kept == std::vector<int>{0, 1, 2});
}

TEST_CASE("solve_bw_fpt on fixed instances") {
  Graph star5 = testutil::star(5);
  auto all = testutil::all_vertices(star5);
  auto res = solve_bw_fpt(star5, all, 1);
  REQUIRE(res.solved);
  CHECK(res.weight == 1);

  Graph gadget = testutil::k4_gadget();
  auto res2 = solve_bw_fpt(gadget, testutil::all_vertices(gadget), 4);
  REQUIRE(res2.solved);
  CHECK(res2.weight == -2);

  auto res3 = solve_bw_fpt(testutil::complete(2), {0, 1}, 0);
  CHECK_FALSE(res3.solved);
}

TEST_CASE("fpt equals the oracle across budgets and colorings") {
  std::mt19937 rng(71);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = testutil::random_graph(1 + static_cast<int>(rng() % 8),
                                     static_cast<int>(rng() % 100), rng());
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<int> black =
          variant == 0 ? testutil::all_vertices(g) : testutil::random_subset(g.n(), rng());
      auto table = exact_bw_min_weight_all_k(g, black);
      for (int k = 0; k <= g.n(); ++k) {
        auto res = solve_bw_fpt(g, black, k);
        if (res.solved) {
          REQUIRE(table[k].has_value());
          CHECK(res.weight == *table[k]);
          CHECK(res.witness.size() <= k);
        } else {
          CHECK_FALSE(table[k].has_value());
        }
      }
    }
  }
}

TEST_CASE("branching decisions stay inside their omega sets") {
  auto check_trace = [](const Graph& g, const BWSolveResult& res) {
    for (const auto& step : res.branch_trace) {
      bool found = false;
      for (int v : step.omega) found |= v == step.vertex;
      CHECK(found);
      CHECK(res.witness.value(step.vertex) == 1);
    }
    (void)g;
  };
  // A wide star all black with k = 1 forces one branching step.
  Graph star8 = testutil::star(8);
  auto res = solve_bw_fpt(star8, testutil::all_vertices(star8), 1);
  REQUIRE(res.solved);
  CHECK(res.weight == 1);
  CHECK_FALSE(res.branch_trace.empty());
  check_trace(star8, res);

  std::mt19937 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    // Sparse graphs with small budgets keep the branching phase busy.
    Graph g = random_d_degenerate(9, 1, rng());
    auto r = solve_bw_fpt(g, testutil::all_vertices(g), 2);
    if (r.solved) check_trace(g, r);
  }
}

TEST_CASE("zheng bounds") {
  auto gadget = gadget_L();
  CHECK(check_zheng_bounds(gadget.graph, gadget.optimum, 6).ok);
  CHECK(check_zheng_bounds(testutil::complete(3),
                           MinusFunction(std::vector<int8_t>{1, 1, 1}), 3)
            .ok);
  CHECK(check_zheng_bounds(testutil::star(3),
                           MinusFunction(std::vector<int8_t>{1, 0, 0, 0}), 1)
            .ok);
  // A red with a single +1 neighbor violates the support clause.
  CHECK(check_zheng_bounds(testutil::path(2),
                           MinusFunction(std::vector<int8_t>{1, -1}), 1)
            .violated_clause == 2);
}
