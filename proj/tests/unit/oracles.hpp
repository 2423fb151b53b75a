#pragma once

// Independent reference computations shared by the unit tests.

#include "racgc/graph.hpp"
#include "racgc/rational.hpp"

#include <random>

namespace oracle {

using racgc::Rational;

// Triangle-free defining graph: the nerve has only vertices and edges.
inline Rational chi(const racgc::Graph& g) {
  return Rational(1) - Rational(g.size(), 2) + Rational(g.edge_count(), 4);
}

// Vertex and edge counts of a cycle of generalized theta-graphs.
inline Rational chi_cycle(const std::vector<std::vector<int>>& comps) {
  long long V = static_cast<long long>(comps.size()), E = 0;
  for (const auto& c : comps)
    for (int n : c) {
      V += n;
      E += n + 1;
    }
  return Rational(1) - Rational(V, 2) + Rational(E, 4);
}

inline bool proportional(const racgc::QVector& v, const racgc::QVector& w) {
  if (v.size() != w.size()) return false;
  bool vz = true, wz = true;
  for (const auto& x : v) vz = vz && x == 0;
  for (const auto& x : w) wz = wz && x == 0;
  if (vz != wz) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[i] * w[j] != v[j] * w[i]) return false;
  return true;
}

inline std::mt19937& rng() {
  static std::mt19937 r(7);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace oracle
