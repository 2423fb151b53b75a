#include "oracles.hpp"

#include "racgc/errors.hpp"
#include "racgc/rational.hpp"

#include <doctest.h>

using namespace racgc;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-8/4")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(make_rational(2, -6)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK(is_integer(parse_rational("12/4")));
  CHECK_THROWS(to_integer(parse_rational("1/2")));
}

TEST_CASE("minimal integral element") {
  QVector v{make_rational(-1, 4), make_rational(-1, 4), make_rational(-1, 2)};
  auto m = minimal_integral(v);
  CHECK(m.rep == ZVector{1, 1, 2});
  CHECK(m.ratio == make_rational(-1, 4));

  for (int t = 0; t < 500; ++t) {
    QVector w(oracle::uniform(1, 5));
    for (auto& x : w) x = make_rational(oracle::uniform(-9, 9), oracle::uniform(1, 6));
    if (is_zero(w)) continue;
    auto mi = minimal_integral(w);
    Integer g = 0;
    for (const auto& x : mi.rep) g = gcd(g, x);
    CHECK(g == 1);
    CHECK(scaled(QVector(mi.rep.begin(), mi.rep.end()), mi.ratio) == w);
    auto first = std::find_if(mi.rep.begin(), mi.rep.end(), [](const Integer& x) { return x != 0; });
    CHECK(*first > 0);
  }
}

TEST_CASE("commensurable agrees with cross products") {
  for (int t = 0; t < 2000; ++t) {
    int n = oracle::uniform(1, 4);
    QVector a(n), b(n);
    for (auto& x : a) x = make_rational(oracle::uniform(-4, 4), oracle::uniform(1, 3));
    if (oracle::uniform(0, 1)) b = scaled(a, make_rational(oracle::uniform(-3, 3), oracle::uniform(1, 3)));
    else
      for (auto& x : b) x = make_rational(oracle::uniform(-4, 4), oracle::uniform(1, 3));
    CHECK(commensurable(a, b) == oracle::proportional(a, b));
  }
  CHECK_FALSE(commensurable({make_rational(1)}, {make_rational(1), make_rational(1)}));
}

TEST_CASE("class multiset match groups vectors by class") {
  QVector u{make_rational(-1, 4), make_rational(-1, 4), make_rational(-1, 2)};
  QVector v{make_rational(-1, 4), make_rational(-1, 2), make_rational(-1, 2)};
  auto m = class_multiset_match({u, u, v}, {scaled(u, 4), scaled(v, 2)});
  CHECK(m.match);
  REQUIRE(m.classes.size() == 2);
  std::size_t total = 0;
  for (const auto& c : m.classes) total += c.left.size();
  CHECK(total == 3);
  auto m2 = class_multiset_match({u}, {v});
  CHECK_FALSE(m2.match);
}

TEST_CASE("sorted_desc and entry_sum") {
  QVector v{make_rational(-3, 4), make_rational(-1, 4), make_rational(-1, 2)};
  CHECK(sorted_desc(v) == QVector{make_rational(-1, 4), make_rational(-1, 2), make_rational(-3, 4)});
  CHECK(entry_sum(v) == make_rational(-3, 2));
}
