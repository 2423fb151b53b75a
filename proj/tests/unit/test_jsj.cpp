#include "oracles.hpp"

#include "racgc/errors.hpp"
#include "racgc/graph_io.hpp"
#include "racgc/jsj.hpp"

#include <doctest.h>

using namespace racgc;

TEST_CASE("JSJ graph of a generalized theta-graph is a star") {
  auto g = theta_graph({2, 2, 3});
  auto j = jsj_decomposition(g);
  REQUIRE(j.type1.size() == 1);
  CHECK(g.name(j.type1[0].first) == "a");
  CHECK(g.name(j.type1[0].second) == "b");
  CHECK(j.type2.size() == 3);
  CHECK(j.valence1(0) == 3);
  CHECK(jsj_diameter(j) == 2);
  auto b = j.to_bipartite();
  CHECK(b.is_tree());
}

TEST_CASE("JSJ graph of a cycle of theta-graphs") {
  auto g = cycle_graph({{2, 3}, {4}, {2, 2}});
  auto j = jsj_decomposition(g);
  CHECK(j.type1.size() == 2);
  CHECK(j.type2.size() == 5);
  CHECK(jsj_diameter(j) == 4);
  // the non-branch Type-2 set is A: three hubs plus the trivial branch
  int big = 0;
  for (std::size_t t = 0; t < j.type2.size(); ++t)
    if (essential_count(g, j.type2[t]) == 3) {
      ++big;
      CHECK(j.type2[t].size() == 7);
      CHECK(j.valence2(static_cast<int>(t)) == 2);
    }
  CHECK(big == 1);
  CHECK(j.to_bipartite().is_tree());
}

TEST_CASE("cut pairs and Type-2 sets") {
  auto g = cycle_graph({{2, 2}, {2, 2}, {2, 2}});
  CHECK(type1_pairs(g).size() == 3);
  CHECK(type2_sets(g).size() == 7);
}

TEST_CASE("JSJ refuses graphs outside the 3-convex class") {
  CHECK_THROWS_AS(jsj_decomposition(theta_graph({1, 2, 2})), Unsupported);
  CHECK_THROWS_AS(jsj_decomposition(theta_graph({1, 1, 2})), Unsupported);
}

TEST_CASE("JSJ JSON names pairs by vertex") {
  auto g = theta_graph({2, 2, 2});
  auto js = jsj_to_json(g, jsj_decomposition(g));
  CHECK(js.at("type1").size() == 1);
  CHECK(js.at("type2").size() == 3);
  CHECK(js.at("edges").size() == 3);
}
