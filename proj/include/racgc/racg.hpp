#pragma once

#include "racgc/graph.hpp"
#include "racgc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace racgc {

// 1 - |V|/2 + |E|/4; throws on triangles.
Rational euler_characteristic(const Graph& g);

// (3 - n)/4 for a branch with n vertices in total.
Rational branch_group_euler(int total_vertices);
Rational branch_group_euler(const Branch& b);

struct GeneralizedTheta {
  std::vector<int> n;  // non-decreasing
  std::string a = "a", b = "b";

  int k() const { return static_cast<int>(n.size()); }
  bool three_convex() const { return !n.empty() && n.front() >= 2; }
  Graph to_graph() const;
  std::string shorthand() const;
  friend bool operator==(const GeneralizedTheta& x, const GeneralizedTheta& y) { return x.n == y.n; }
};

GeneralizedTheta make_theta(std::vector<int> n);

struct ThetaCycle {
  // components[i] lists interior counts (non-decreasing) of the branches
  // joining a_i to a_{i+1}; indices are cyclic.
  std::vector<std::vector<int>> components;
  std::vector<std::string> hubs;  // names of a_1..a_N when recognized from a graph

  int N() const { return static_cast<int>(components.size()); }
  std::vector<int> r() const;
  std::vector<int> nontrivial() const;  // I, 0-based
  bool three_convex() const;
  Graph to_graph() const;  // canonical realization, see cycle_graph
  std::vector<std::string> a_set(const Graph& realization) const;  // A in to_graph() names
  std::string shorthand() const;
  friend bool operator==(const ThetaCycle& x, const ThetaCycle& y) { return x.components == y.components; }
};

// Sorts each component and picks the lexicographically minimal rotation/reflection.
ThetaCycle make_cycle(std::vector<std::vector<int>> components);

std::optional<GeneralizedTheta> recognize_gen_theta(const Graph& g);
std::optional<ThetaCycle> recognize_theta_cycle(const Graph& g);

QVector theta_vector(const GeneralizedTheta& t);

struct CycleData {
  std::vector<QVector> vectors;  // v_i for i in I, each non-increasing
  std::vector<int> indices;      // component index of each v_i (0-based)
  Rational chi_a;                // χ(W_A)
  std::optional<QVector> w;
  std::optional<int> r;

  static CycleData from_vectors(std::vector<QVector> vectors, Rational chi_a);
};

CycleData cycle_data(const ThetaCycle& c);

GeneralizedTheta double_theta(const GeneralizedTheta& t);

struct ThetaToCycle {
  ThetaCycle cycle;
  std::vector<std::string> steps;  // human-readable doubling record
  int index = 1;                   // index of the subgroup reached
};

ThetaToCycle theta_to_cycle(const GeneralizedTheta& t);

}  // namespace racgc

namespace racgc {

// theta:/cycle: shorthand when recognized, otherwise a vertex/edge count.
std::string describe_graph(const Graph& g);

}  // namespace racgc
