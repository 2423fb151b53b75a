#include "oracles.hpp"

#include "racgc/amalgam.hpp"
#include "racgc/errors.hpp"

#include <doctest.h>

using namespace racgc;

namespace {

SurfaceAmalgam star(std::vector<int> genera) {
  SurfaceAmalgam x;
  x.type1 = {"c"};
  for (std::size_t i = 0; i < genera.size(); ++i) x.type2.push_back({"y" + std::to_string(i), genera[i], {"c"}});
  return x;
}

BipartiteGraph k13() {
  BipartiteGraph b;
  b.add_vertex("x", 1);
  for (int i = 0; i < 3; ++i) b.add_edge(0, b.add_vertex("y" + std::to_string(i), 2));
  return b;
}

}  // namespace

TEST_CASE("surfaces") {
  CHECK(Surface{1, 1}.euler() == -1);
  CHECK(Surface{0, 3}.euler() == -1);
  CHECK(Surface{2, 2}.str() == "S_{2,2}");
}

TEST_CASE("amalgam validity") {
  CHECK(star({1, 1, 1}).problems().empty());
  CHECK_FALSE(star({1, 1}).problems().empty());     // circle of valence 2
  CHECK_FALSE(star({0, 1, 1}).problems().empty());  // disc
  auto x = star({1, 1, 1});
  x.type2[0].boundary = {"nope"};
  CHECK_THROWS_AS(x.validate(), InvalidInput);
}

TEST_CASE("amalgam euler characteristic and JSON round trip") {
  auto x = star({1, 2, 3});
  CHECK(amalgam_euler(x) == -1 - 3 - 5);
  auto y = amalgam_from_json(amalgam_to_json(x));
  CHECK(amalgam_to_json(y) == amalgam_to_json(x));
  CHECK(amalgam_homeomorphism(x, y).has_value());
  CHECK_FALSE(amalgam_homeomorphism(x, star({1, 1, 3})).has_value());
  CHECK_THROWS_AS(load_amalgam("{\"type1\": 3}"), InvalidInput);
}

TEST_CASE("H(T) half-covers T") {
  auto h = build_H(k13());
  CHECK(h.source.size() == 2 + 3);
  CHECK(h.source.edges.size() == 6);
  CHECK(verify_half_covering(h));
}

TEST_CASE("half-covering violations") {
  // alternating 6-cycle folded onto a single edge: two edges at a Type-1 vertex share an image
  BipartiteGraph hex, edge;
  for (int i = 0; i < 6; ++i) hex.add_vertex("a" + std::to_string(i), i % 2 == 0 ? 1 : 2);
  for (int i = 0; i < 6; ++i) {
    int u = i, v = (i + 1) % 6;
    if (u % 2) std::swap(u, v);
    hex.add_edge(u, v);
  }
  edge.add_vertex("x", 1);
  edge.add_vertex("y", 2);
  edge.add_edge(0, 1);
  HalfCovering h{hex, edge, {0, 1, 0, 1, 0, 1}, {0, 0, 0, 0, 0, 0}};
  CHECK_FALSE(verify_half_covering(h));
}

TEST_CASE("positive genus cover") {
  for (int b = 1; b <= 5; ++b)
    for (int g = 0; g <= 3; ++g) {
      Surface s{g, b};
      if (s.euler() >= 0) continue;
      auto c = pos_genus_cover(s);
      CHECK(c.degree == 3);
      CHECK(c.cover.genus == 3 * g + b - 2);
      CHECK(c.cover.boundary == b);
      CHECK(c.cover.euler() == 3 * s.euler());
      CHECK(surface_cover_violations(c).empty());
    }
}

TEST_CASE("Neumann covers") {
  auto bad = neumann_cover(Surface{1, 1}, 2, {degrees({2})});
  CHECK_FALSE(bad.has_value());
  auto ok = neumann_cover(Surface{1, 1}, 2, {degrees({1, 1})});
  REQUIRE(ok.has_value());
  CHECK(*ok == Surface{1, 2});
  CHECK_THROWS(neumann_cover(Surface{1, 1}, 3, {degrees({1, 1})}));
}

TEST_CASE("tree half-cover targets") {
  auto ts = tree_half_cover_targets(k13(), 12);
  REQUIRE_FALSE(ts.empty());
  for (const auto& t : ts) {
    CHECK(t.target.is_tree());
    CHECK(verify_half_covering(t.map));
  }
  auto h = build_H(k13());
  auto common = common_half_cover_target(h.source, k13(), 12);
  REQUIRE(common.has_value());
  CHECK(verify_half_covering(common->from_first));
  CHECK(verify_half_covering(common->from_second));
}

TEST_CASE("search bound") {
  BipartiteGraph big;
  big.add_vertex("x", 1);
  for (int i = 0; i < 20; ++i) big.add_edge(0, big.add_vertex("y" + std::to_string(i), 2));
  CHECK_THROWS_AS(tree_half_cover_targets(big, 12), Unsupported);
}
