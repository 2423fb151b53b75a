#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racgc {

using VertexId = int;

// Finite simplicial graph. Vertices are kept in lexicographic name order so
// ids, adjacency lists and edge lists are deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId id(std::string_view name) const;

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool essential(VertexId v) const { return degree(v) >= 3; }
  bool adjacent(VertexId u, VertexId v) const;
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  std::vector<std::string> names_of(const std::vector<VertexId>& vs) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs);

// Connected components of g with the vertices flagged in `removed` deleted.
std::vector<std::vector<VertexId>> components(const Graph& g, const std::vector<char>& removed);
int component_count(const Graph& g, const std::vector<char>& removed);

// Path between two essential vertices whose interior vertices all have valence 2.
struct Branch {
  VertexId u = -1, v = -1;          // u <= v
  std::vector<VertexId> interior;   // ordered from u to v
  int vertex_count() const { return static_cast<int>(interior.size()) + 2; }
  friend bool operator==(const Branch&, const Branch&) = default;
};

std::vector<Branch> branches(const Graph& g);
std::vector<VertexId> essential_vertices(const Graph& g);

// Components of |g| minus the two points a and b: vertex components of
// g - {a, b}, plus one for the open edge when a and b are adjacent.
int realization_components_minus_pair(const Graph& g, VertexId a, VertexId b);

// All-pairs table of vertex components of g - {x, y}; diagonal unused.
class PairComponents {
 public:
  explicit PairComponents(const Graph& g);
  int vertex_components(VertexId x, VertexId y) const { return table_[x * n_ + y]; }
  int realization(VertexId x, VertexId y) const;

 private:
  const Graph* g_;
  int n_;
  std::vector<int> table_;
};

bool is_3_convex(const Graph& g);

// Vertex set of an induced subgraph homeomorphic to K4, if one exists.
std::optional<std::vector<VertexId>> find_induced_subdivided_k4(const Graph& g);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::vector<std::string>> witness;  // present iff the check failed
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool in_G = false;
  bool in_G_3convex = false;
  const CheckResult& check(std::string_view name) const;
};

ValidationReport validate(const Graph& g);

}  // namespace racgc
