#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace racgc {

// Bipartite multigraph with Type-1 and Type-2 vertices. Every edge joins a
// Type-1 vertex to a Type-2 vertex.
struct BipartiteGraph {
  struct Vertex {
    std::string name;
    int type = 1;  // 1 or 2
  };
  struct Edge {
    int x = -1;  // Type-1 end
    int y = -1;  // Type-2 end
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int add_vertex(std::string name, int type);
  int add_edge(int x, int y);

  int size() const { return static_cast<int>(vertices.size()); }
  int type(int v) const { return vertices[v].type; }
  int find(const std::string& name) const;  // -1 if absent
  std::vector<int> star(int v) const;       // incident edge ids
  std::vector<int> of_type(int t) const;
  int valence(int v) const { return static_cast<int>(star(v).size()); }
  int other_end(int e, int v) const { return edges[e].x == v ? edges[e].y : edges[e].x; }

  bool connected() const;
  bool is_tree() const;  // connected, no multi-edges, |E| = |V| - 1
  int diameter() const;  // requires connected
};

nlohmann::json bipartite_to_json(const BipartiteGraph& g);
BipartiteGraph bipartite_from_json(const nlohmann::json& j);

// Type-preserving isomorphism a -> b respecting edge multiplicities and the
// optional vertex colours. Result maps vertex ids of a to vertex ids of b.
std::optional<std::vector<int>> find_isomorphism(const BipartiteGraph& a, const BipartiteGraph& b,
                                                 const std::vector<std::string>& colour_a = {},
                                                 const std::vector<std::string>& colour_b = {});

bool is_isomorphism(const BipartiteGraph& a, const BipartiteGraph& b, const std::vector<int>& map);

}  // namespace racgc
