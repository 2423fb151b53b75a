#include "racgc/rational.hpp"

#include "racgc/errors.hpp"

#include <algorithm>
#include <map>

namespace racgc {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  if (den < 0) return -Rational(Integer(num), -Integer(den));
  return Rational(Integer(num), Integer(den));
}

Rational parse_rational(const std::string& s) {
  auto bad = [&] { return InvalidInput("not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    std::size_t i = (t.size() > 1 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw bad();
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') throw bad();
    return Integer(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer n = parse_int(s.substr(0, slash));
  Integer d = parse_int(s.substr(slash + 1));
  if (d == 0) throw bad();
  return Rational(n, d);
}

std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const Integer& n) { return n.str(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw InvariantFailure("expected an integer, got " + to_string(r));
  return numerator(r);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

template <class V>
static std::string join_vec(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const QVector& v) { return join_vec(v); }
std::string to_string(const ZVector& v) { return join_vec(v); }

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QVector scaled(const QVector& v, const Rational& c) {
  QVector out(v);
  for (auto& x : out) x *= c;
  return out;
}

QVector sorted_desc(QVector v) {
  std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return v;
}

Rational entry_sum(const QVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool commensurable(const QVector& v, const QVector& w) {
  if (v.size() != w.size()) return false;
  bool zv = is_zero(v), zw = is_zero(w);
  if (zv || zw) return zv && zw;
  std::size_t i = 0;
  while (v[i] == 0) ++i;
  if (w[i] == 0) return false;
  Rational c = w[i] / v[i];
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] * c != w[j]) return false;
  return true;
}

MinimalIntegral minimal_integral(const QVector& v) {
  if (v.empty() || is_zero(v)) throw InvalidInput("minimal integral element of a zero vector");
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, denominator(x));
  ZVector z;
  z.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    z.push_back(numerator(x) * (den / denominator(x)));
    g = gcd(g, z.back());
  }
  auto first = std::find_if(z.begin(), z.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : z) x /= g;
  std::size_t i = static_cast<std::size_t>(first - z.begin());
  return {z, v[i] / Rational(z[i])};
}

ClassMatch class_multiset_match(const std::vector<QVector>& xs, const std::vector<QVector>& ys) {
  std::map<std::pair<std::size_t, ZVector>, ClassGroup> groups;
  auto add = [&](const QVector& v, int idx, bool left) {
    auto rep = minimal_integral(v).rep;
    auto& g = groups[{rep.size(), rep}];
    g.rep = rep;
    (left ? g.left : g.right).push_back(idx);
  };
  for (std::size_t i = 0; i < xs.size(); ++i) add(xs[i], static_cast<int>(i), true);
  for (std::size_t i = 0; i < ys.size(); ++i) add(ys[i], static_cast<int>(i), false);
  ClassMatch m;
  m.match = true;
  for (auto& [key, g] : groups) {
    if (g.left.empty() || g.right.empty()) m.match = false;
    m.classes.push_back(std::move(g));
  }
  return m;
}

}  // namespace racgc
