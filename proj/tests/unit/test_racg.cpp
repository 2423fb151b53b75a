#include "oracles.hpp"

#include "racgc/errors.hpp"
#include "racgc/graph_io.hpp"
#include "racgc/racg.hpp"

#include <doctest.h>

using namespace racgc;

namespace {
QVector qv(std::initializer_list<std::pair<int, int>> xs) {
  QVector v;
  for (auto [p, q] : xs) v.push_back(make_rational(p, q));
  return v;
}
}  // namespace

TEST_CASE("euler characteristic matches the vertex/edge count formula") {
  for (int t = 0; t < 60; ++t) {
    std::vector<int> n(oracle::uniform(2, 5));
    for (auto& x : n) x = oracle::uniform(1, 6);
    auto g = theta_graph(n);
    CHECK(euler_characteristic(g) == oracle::chi(g));
  }
  for (auto comps : std::vector<std::vector<std::vector<int>>>{{{2, 3}, {4}, {2, 2}}, {{2, 2}, {2, 2}, {2, 2}}, {{3}, {2, 5, 7}, {4}, {2, 2}}}) {
    auto g = cycle_graph(comps);
    CHECK(euler_characteristic(g) == oracle::chi_cycle(comps));
  }
}

TEST_CASE("branch group euler characteristic") {
  CHECK(branch_group_euler(4) == make_rational(-1, 4));
  CHECK(branch_group_euler(5) == make_rational(-1, 2));
  CHECK(branch_group_euler(3) == 0);
}

TEST_CASE("recognize generalized theta-graphs") {
  auto t = recognize_gen_theta(theta_graph({4, 2, 3, 2}));
  REQUIRE(t.has_value());
  CHECK(t->n == std::vector<int>{2, 2, 3, 4});
  CHECK(t->k() == 4);
  CHECK_FALSE(recognize_gen_theta(cycle_graph({{2, 3}, {4}, {2, 2}})).has_value());
}

TEST_CASE("recognize cycles of generalized theta-graphs") {
  auto c = recognize_theta_cycle(cycle_graph({{2, 3}, {4}, {2, 2}}));
  REQUIRE(c.has_value());
  CHECK(c->N() == 3);
  auto r = c->r();
  std::sort(r.begin(), r.end());
  CHECK(r == std::vector<int>{1, 2, 2});
  CHECK(c->nontrivial().size() == 2);
  CHECK_FALSE(recognize_theta_cycle(theta_graph({2, 2, 2})).has_value());
  CHECK_THROWS(cycle_graph({{2}, {2}, {2, 2}}));
}

TEST_CASE("theta vectors") {
  CHECK(theta_vector(make_theta({2, 2, 3, 4})) == qv({{-1, 4}, {-1, 4}, {-1, 2}, {-3, 4}}));
  CHECK(theta_vector(make_theta({2, 2, 2})) == qv({{-1, 4}, {-1, 4}, {-1, 4}}));
  CHECK(theta_vector(make_theta({5, 5, 9})) == qv({{-1, 1}, {-1, 1}, {-2, 1}}));
  CHECK_THROWS_AS(theta_vector(make_theta({1, 2, 2})), Unsupported);
}

TEST_CASE("cycle data") {
  const std::vector<std::vector<int>> comps{{2, 3}, {4}, {2, 2}};
  auto d = cycle_data(*recognize_theta_cycle(cycle_graph(comps)));
  REQUIRE(d.vectors.size() == 2);
  // A: three hubs and the four interior vertices of the trivial component
  Rational chiA = Rational(1) - Rational(7, 2) + Rational(5, 4);
  CHECK(d.chi_a == chiA);
  CHECK(d.r == 2);
  REQUIRE(d.w.has_value());
  QVector w{-Rational(1, 4) - Rational(1, 4), -Rational(1, 2) - Rational(1, 4), chiA};
  CHECK(*d.w == sorted_desc(w));

  auto toy = CycleData::from_vectors({qv({{-1, 4}, {-1, 4}})}, make_rational(-1, 4));
  CHECK(*toy.w == qv({{-1, 4}, {-1, 4}, {-1, 4}}));
  auto mixed = CycleData::from_vectors({qv({{-1, 4}, {-1, 4}}), qv({{-1, 4}, {-1, 4}, {-1, 4}})}, make_rational(-1, 4));
  CHECK_FALSE(mixed.w.has_value());
}

TEST_CASE("doubling") {
  CHECK(double_theta(make_theta({1, 2, 2})).n == std::vector<int>{2, 2, 2, 2});
  CHECK(double_theta(make_theta({1, 2, 3})).n == std::vector<int>{2, 2, 3, 3});
  CHECK_THROWS(double_theta(make_theta({2, 2, 2})));
}

TEST_CASE("theta_to_cycle yields a 3-convex cycle whose euler characteristic scales by the index") {
  for (auto n : std::vector<std::vector<int>>{{2, 2, 2}, {2, 3, 4}, {3, 3, 3, 5}, {2, 5, 9}}) {
    auto t = make_theta(n);
    auto tc = theta_to_cycle(t);
    CHECK(tc.cycle.three_convex());
    auto g = tc.cycle.to_graph();
    CHECK(validate(g).in_G_3convex);
    CHECK(oracle::chi(g) == Rational(tc.index) * oracle::chi(t.to_graph()));
  }
}

TEST_CASE("describe_graph") {
  CHECK(describe_graph(theta_graph({2, 2, 3})) == "theta:2,2,3");
}
