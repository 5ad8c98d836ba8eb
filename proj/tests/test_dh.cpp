#include <climits>

#include "doctest.h"
#include "minusdom/dh.hpp"
#include "minusdom/generators.hpp"
#include "minusdom/oracle.hpp"
#include "minusdom/reductions.hpp"
#include "test_util.hpp"

using namespace minusdom;

TEST_CASE("dh recognition accepts and validates simple graphs") {
  auto k2 = build_dh_decomposition(testutil::complete(2));
  REQUIRE(k2.accepted());
  // Root twinset is always empty; each leaf carries itself.
  const auto& t = *k2.decomposition;
  CHECK(t.twinset[t.root].empty());
  int leaves = 0;
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (t.nodes[i].kind == DHDecomposition::NodeKind::Leaf) {
      ++leaves;
      CHECK(t.twinset[i] == std::vector<int>{t.nodes[i].vertex});
    }
  CHECK(leaves == 2);

  CHECK(build_dh_decomposition(testutil::path(4)).accepted());
  CHECK(build_dh_decomposition(testutil::cycle(4)).accepted());
}

TEST_CASE("dh recognition rejects C5 with a stuck certificate") {
  auto rec = build_dh_decomposition(testutil::cycle(5));
  CHECK_FALSE(rec.accepted());
  CHECK(rec.stuck == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("the 15-vertex gadget is not distance-hereditary") {
  // No pendant and no twin pair anywhere, so pruning stalls immediately and
  // the gadget's optimum stays an oracle-only fact.
  auto rec = build_dh_decomposition(gadget_L().graph);
  CHECK_FALSE(rec.accepted());
  CHECK(rec.stuck.size() == 15);
}

TEST_CASE("generated dh graphs are accepted and reconstruct exactly") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Graph g = random_dh(1 + seed % 12, seed);
    auto rec = build_dh_decomposition(g);
    REQUIRE(rec.accepted());
    CHECK(validate_dh_decomposition(g, *rec.decomposition).ok);
    CHECK(dh_to_graph(*rec.decomposition).edges() == g.edges());
  }
}

TEST_CASE("mu leaf cells") {
  MuTable m = mu_leaf(4, true);
  CHECK(m.at(0, 0, 0) == 1);               // value +1 at t = 0
  CHECK(m.at(0, 0, 1) == MuTable::kInf);   // value 0 needs t > 0
  CHECK(m.at(2, 1, 0) == -1);              // value -1 at t = 2
  MuTable isolated = mu_leaf(4, false);
  CHECK(isolated.at(0, 0, 0) == 1);
}

TEST_CASE("mu combine closes the two-vertex join") {
  MuTable leaf = mu_leaf(2, true);
  // K2 root: both twinsets exit, so the table collapses to one row.
  MuTable root = mu_combine(DHDecomposition::NodeKind::Join, false, false, leaf, leaf);
  CHECK(root.twinset_size() == 0);
  CHECK(root.at(0, 0, 0) == 1);
}

TEST_CASE("gamma_minus_dh on fixed instances") {
  CHECK(gamma_minus_dh(testutil::empty(1)).gamma_minus == 1);
  CHECK(gamma_minus_dh(testutil::path(3)).gamma_minus == 1);
  CHECK(gamma_minus_dh(testutil::cycle(4)).gamma_minus == 2);
  CHECK(gamma_minus_dh(testutil::path(4)).gamma_minus ==
        *exact_gamma_minus(testutil::path(4)).optimum);
  CHECK_THROWS_AS(gamma_minus_dh(testutil::cycle(5)), NotInClassError);
}

TEST_CASE("dh solver equals the oracle on random dh graphs") {
  for (unsigned seed = 1; seed <= 120; ++seed) {
    Graph g = random_dh(1 + seed % 9, 500 + seed);
    auto solve = gamma_minus_dh(g);
    auto oracle = exact_gamma_minus(g);
    CHECK(solve.gamma_minus == *oracle.optimum);
    auto rep = validate_minus_function(g, solve.witness);
    CHECK(rep.valid);
    CHECK(solve.witness.weight() == solve.gamma_minus);
  }
}

TEST_CASE("dh solver agrees with the cotree solver on cographs") {
  for (unsigned seed = 1; seed <= 60; ++seed) {
    Graph g = random_cograph(1 + seed % 9, 900 + seed);
    CHECK(gamma_minus_dh(g).gamma_minus == gamma_minus_cograph(g).gamma_minus);
  }
}

TEST_CASE("mu tables are antitone in t") {
  // More outside help never makes a completion more expensive.
  auto antitone = [](const MuTable& m) {
    int n = m.total_n(), q = m.twinset_size();
    for (int t = -n; t < n; ++t)
      for (int a = 0; a <= q; ++a)
        for (int b = 0; a + b <= q; ++b) {
          long lo = m.at(t, a, b) == MuTable::kInf ? LONG_MAX : m.at(t, a, b);
          long hi = m.at(t + 1, a, b) == MuTable::kInf ? LONG_MAX : m.at(t + 1, a, b);
          CHECK(lo >= hi);
        }
  };
  MuTable leaf = mu_leaf(5, true);
  antitone(leaf);
  antitone(mu_combine(DHDecomposition::NodeKind::Join, true, true, leaf, leaf));
  antitone(mu_combine(DHDecomposition::NodeKind::Union, true, false, leaf, leaf));
}

TEST_CASE("parse_dh_decomposition validates against the graph") {
  Graph p3 = testutil::path(3);
  // P3 = join of the middle vertex with the union of the endpoints.
  auto tree = parse_dh_decomposition("J(U(0,2),1)", p3);
  CHECK(gamma_minus_dh(p3, tree).gamma_minus == 1);
  CHECK_THROWS_AS(parse_dh_decomposition("J(U(0,1),2)", p3), std::invalid_argument);
}
