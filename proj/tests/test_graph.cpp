#include <random>

#include "doctest.h"
#include "minusdom/graph.hpp"
#include "test_util.hpp"

using namespace minusdom;

TEST_CASE("parse_graph reads the edge-list format") {
  Graph k2 = parse_graph("2 1\n0 1\n");
  CHECK(k2.n() == 2);
  CHECK(k2.m() == 1);
  CHECK(k2.has_edge(0, 1));

  Graph k1 = parse_graph("1 0\n");
  CHECK(k1.n() == 1);
  CHECK(k1.m() == 0);

  Graph triangle = parse_graph("3 3\n0 1\n1 2\n0 2\n");
  CHECK(triangle.m() == 3);
  CHECK(triangle.has_edge(0, 2));

  // Comments and blank lines are ignored.
  Graph commented = parse_graph("# a triangle\n3 3\n\n0 1\n1 2 # last two\n0 2\n");
  CHECK(write_graph(commented) == write_graph(triangle));
}

TEST_CASE("parse_graph rejects malformed input with distinct error kinds") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error");
    return ParseError::Kind::BadHeader;
  };
  CHECK(kind_of("2\n") == ParseError::Kind::BadHeader);
  CHECK(kind_of("x y\n") == ParseError::Kind::BadHeader);
  CHECK(kind_of("2 2\n0 1\n") == ParseError::Kind::BadHeader);
  CHECK(kind_of("2 1\n0 2\n") == ParseError::Kind::VertexOutOfRange);
  CHECK(kind_of("2 1\n1 1\n") == ParseError::Kind::Loop);
  CHECK(kind_of("3 2\n0 1\n1 0\n") == ParseError::Kind::DuplicateEdge);
  CHECK(kind_of("2 1\n0 q\n") == ParseError::Kind::BadEdgeLine);
}

TEST_CASE("write then parse is the identity on canonical edge lists") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = testutil::random_graph(1 + static_cast<int>(rng() % 12),
                                     static_cast<int>(rng() % 100), rng());
    Graph back = parse_graph(write_graph(g));
    CHECK(back.n() == g.n());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("closed neighborhoods") {
  CHECK(parse_graph("2 1\n0 1\n").closed_neighborhood(0) == std::vector<int>{0, 1});
  CHECK(parse_graph("1 0\n").closed_neighborhood(0) == std::vector<int>{0});
  CHECK(testutil::star(3).closed_neighborhood(0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("weight and size of assignments") {
  MinusFunction zero(std::vector<int8_t>(5, 0));
  CHECK(zero.weight() == 0);
  CHECK(zero.size() == 0);

  // Four ones on the K4, minus one on each of the six rim vertices.
  std::vector<int8_t> vals{1, 1, 1, 1, -1, -1, -1, -1, -1, -1};
  MinusFunction gadget(vals);
  CHECK(gadget.weight() == -2);
  CHECK(gadget.size() == 4);

  MinusFunction star_center_one(std::vector<int8_t>{1, 0, 0, 0});
  CHECK(star_center_one.weight() == 1);
  CHECK(star_center_one.size() == 1);
}

TEST_CASE("validate_minus_function") {
  Graph gadget = testutil::k4_gadget();
  MinusFunction f(std::vector<int8_t>{1, 1, 1, 1, -1, -1, -1, -1, -1, -1});
  auto rep = validate_minus_function(gadget, f);
  CHECK(rep.valid);

  Graph c4 = testutil::cycle(4);
  auto bad = validate_minus_function(c4, MinusFunction(std::vector<int8_t>{1, 0, 0, 0}));
  CHECK_FALSE(bad.valid);
  CHECK(bad.violators == std::vector<int>{2});

  auto k1 = validate_minus_function(testutil::empty(1), MinusFunction(std::vector<int8_t>{0}));
  CHECK_FALSE(k1.valid);

  CHECK_THROWS_AS(validate_minus_function(c4, MinusFunction(std::vector<int8_t>{0})),
                  std::invalid_argument);
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(testutil::path(5)).d == 1);
  CHECK(degeneracy(testutil::star(4)).d == 1);
  CHECK(degeneracy(testutil::complete(4)).d == 3);
  CHECK(degeneracy(testutil::cycle(4)).d == 2);

  // Every vertex has at most d neighbors later in the removal ordering.
  Graph g = testutil::random_graph(12, 40, 99);
  auto res = degeneracy(g);
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[res.ordering[i]] = i;
  for (int v = 0; v < g.n(); ++v) {
    int later = 0;
    for (int u : g.neighbors(v)) later += pos[u] > pos[v];
    CHECK(later <= res.d);
  }
}

TEST_CASE("is_dominating_set") {
  CHECK(is_dominating_set(testutil::star(4), {0}));
  CHECK_FALSE(is_dominating_set(testutil::path(3), {0}));
  Graph g = testutil::random_graph(8, 30, 3);
  CHECK(is_dominating_set(g, testutil::all_vertices(g)));
}

TEST_CASE("ones of a valid assignment dominate; weight identity") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = testutil::random_graph(2 + static_cast<int>(rng() % 7),
                                     static_cast<int>(rng() % 100), rng());
    std::vector<int8_t> vals(g.n());
    for (auto& v : vals) v = static_cast<int8_t>(static_cast<int>(rng() % 3) - 1);
    MinusFunction f(vals);
    CHECK(f.weight() == f.size() - f.negative_count());
    if (validate_minus_function(g, f).valid) {
      std::vector<int> ones;
      for (int v = 0; v < g.n(); ++v)
        if (f.value(v) == 1) ones.push_back(v);
      CHECK(is_dominating_set(g, ones));
    }
  }
}

TEST_CASE("assignment file round trip") {
  MinusFunction f(std::vector<int8_t>{-1, 0, 1, 1});
  CHECK(write_assignment(f) == "-1 0 1 1\n");
  CHECK(parse_assignment(write_assignment(f)) == f);
  CHECK_THROWS_AS(parse_assignment("2 0"), ParseError);
}
