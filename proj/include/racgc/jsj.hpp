#pragma once

#include "racgc/bipartite.hpp"
#include "racgc/graph.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace racgc {

struct JsjGraph {
  std::vector<std::pair<VertexId, VertexId>> type1;  // essential cut pairs, sorted
  std::vector<std::vector<VertexId>> type2;          // vertex sets A, sorted
  std::vector<std::pair<int, int>> edges;            // (type1 index, type2 index)

  // Cyclic order of each Type-2 set along an induced cycle.
  std::vector<std::vector<VertexId>> cyclic_orders;

  BipartiteGraph to_bipartite() const;  // Type-1 ids "x<i>", Type-2 ids "y<j>"
  int valence1(int i) const;
  int valence2(int j) const;
};

std::vector<std::pair<VertexId, VertexId>> type1_pairs(const Graph& g);
std::vector<std::vector<VertexId>> type2_sets(const Graph& g);

// Throws Unsupported unless validate(g).in_G_3convex; throws InvariantFailure
// if the assembled graph breaks a structural lemma.
JsjGraph jsj_decomposition(const Graph& g);

int jsj_diameter(const JsjGraph& j);

nlohmann::json jsj_to_json(const Graph& g, const JsjGraph& j);

// Number of essential vertices in a Type-2 set.
int essential_count(const Graph& g, const std::vector<VertexId>& A);

}  // namespace racgc
