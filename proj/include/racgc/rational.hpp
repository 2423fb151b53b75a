#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace racgc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(long long num, long long den = 1);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }
bool is_integer(const Rational& r);
Integer to_integer(const Rational& r);  // throws unless integral

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

std::string to_string(const QVector& v);
std::string to_string(const ZVector& v);

bool is_zero(const QVector& v);
QVector scaled(const QVector& v, const Rational& c);
QVector sorted_desc(QVector v);
Rational entry_sum(const QVector& v);

// Kv = Lw for some nonzero integers K, L.
bool commensurable(const QVector& v, const QVector& w);

struct MinimalIntegral {
  ZVector rep;  // gcd 1, first nonzero entry positive
  Rational ratio;  // v = ratio * rep
};
MinimalIntegral minimal_integral(const QVector& v);

struct ClassGroup {
  ZVector rep;
  std::vector<int> left;   // indices into xs
  std::vector<int> right;  // indices into ys
};

struct ClassMatch {
  bool match = false;  // same set of classes on both sides
  std::vector<ClassGroup> classes;
};

ClassMatch class_multiset_match(const std::vector<QVector>& xs, const std::vector<QVector>& ys);

}  // namespace racgc
