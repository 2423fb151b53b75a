#include "racgc/graph.hpp"

#include "racgc/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace racgc {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1]) throw InvalidInput("duplicate vertex '" + vertices[i] + "'");
  names_ = std::move(vertices);
  adj_.assign(names_.size(), {});
  for (const auto& [a, b] : edges) {
    auto ia = find(a), ib = find(b);
    if (!ia) throw InvalidInput("edge endpoint '" + a + "' is not a vertex");
    if (!ib) throw InvalidInput("edge endpoint '" + b + "' is not a vertex");
    if (*ia == *ib) throw InvalidInput("loop at '" + a + "'");
    edges_.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw InvalidInput("duplicate edge {" + names_[edges_[i].first] + "," + names_[edges_[i].second] + "}");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::id(std::string_view name) const {
  auto v = find(name);
  if (!v) throw InvalidInput("unknown vertex '" + std::string(name) + "'");
  return *v;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::string> Graph::names_of(const std::vector<VertexId>& vs) const {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (auto v : vs) out.push_back(names_[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs) {
  std::vector<char> in(g.size(), 0);
  for (auto v : vs) in[v] = 1;
  std::vector<std::string> names;
  for (auto v : vs) names.push_back(g.name(v));
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) es.emplace_back(g.name(u), g.name(v));
  return Graph(std::move(names), es);
}

std::vector<std::vector<VertexId>> components(const Graph& g, const std::vector<char>& removed) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(removed);
  seen.resize(g.size(), 0);
  for (VertexId s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int component_count(const Graph& g, const std::vector<char>& removed) {
  return static_cast<int>(components(g, removed).size());
}

std::vector<VertexId> essential_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.essential(v)) out.push_back(v);
  return out;
}

std::vector<Branch> branches(const Graph& g) {
  std::vector<Branch> out;
  std::set<std::pair<VertexId, VertexId>> used;  // first edge of each walk
  for (VertexId u : essential_vertices(g)) {
    for (VertexId w : g.neighbors(u)) {
      if (used.count({u, w})) continue;
      std::vector<VertexId> interior;
      VertexId prev = u, cur = w;
      while (g.degree(cur) == 2) {
        interior.push_back(cur);
        VertexId next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
      }
      if (!g.essential(cur)) continue;  // dead end at a valence-1 vertex
      used.insert({u, w});
      used.insert({cur, interior.empty() ? u : interior.back()});
      if (cur == u) continue;  // closed loop at a single vertex: not a branch
      Branch b{u, cur, interior};
      if (b.u > b.v) {
        std::swap(b.u, b.v);
        std::reverse(b.interior.begin(), b.interior.end());
      }
      out.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& b) {
    return std::tie(a.u, a.v, a.interior) < std::tie(b.u, b.v, b.interior);
  });
  return out;
}

int realization_components_minus_pair(const Graph& g, VertexId a, VertexId b) {
  if (a == b) throw InvalidInput("pair must consist of distinct vertices");
  std::vector<char> removed(g.size(), 0);
  removed[a] = removed[b] = 1;
  return component_count(g, removed) + (g.adjacent(a, b) ? 1 : 0);
}

// For each x, articulation data of g - x gives the component count of
// g - {x, y} for every y at once.
PairComponents::PairComponents(const Graph& g) : g_(&g), n_(g.size()), table_(n_ * n_, 0) {
  std::vector<int> disc(n_), low(n_), comp(n_), sep_children(n_), children(n_);
  std::vector<VertexId> parent(n_);
  for (VertexId x = 0; x < n_; ++x) {
    std::fill(disc.begin(), disc.end(), -1);
    std::fill(sep_children.begin(), sep_children.end(), 0);
    std::fill(children.begin(), children.end(), 0);
    int timer = 0, ncomp = 0;
    std::vector<VertexId> roots;
    for (VertexId r = 0; r < n_; ++r) {
      if (r == x || disc[r] >= 0) continue;
      roots.push_back(r);
      // iterative DFS
      std::vector<std::pair<VertexId, std::size_t>> stack{{r, 0}};
      parent[r] = -1;
      disc[r] = low[r] = timer++;
      comp[r] = ncomp;
      while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        auto nb = g.neighbors(v);
        if (idx < nb.size()) {
          VertexId w = nb[idx++];
          if (w == x) continue;
          if (disc[w] < 0) {
            parent[w] = v;
            disc[w] = low[w] = timer++;
            comp[w] = ncomp;
            ++children[v];
            stack.emplace_back(w, 0);
          } else if (w != parent[v]) {
            low[v] = std::min(low[v], disc[w]);
          }
        } else {
          VertexId done = v;
          stack.pop_back();
          if (!stack.empty()) {
            VertexId p = stack.back().first;
            low[p] = std::min(low[p], low[done]);
            if (low[done] >= disc[p]) ++sep_children[p];
          }
        }
      }
      ++ncomp;
    }
    std::vector<char> is_root(n_, 0);
    for (auto r : roots) is_root[r] = 1;
    for (VertexId y = 0; y < n_; ++y) {
      if (y == x) continue;
      int c = is_root[y] ? ncomp - 1 + children[y] : ncomp + sep_children[y];
      table_[x * n_ + y] = c;
    }
  }
}

int PairComponents::realization(VertexId x, VertexId y) const {
  return vertex_components(x, y) + (g_->adjacent(x, y) ? 1 : 0);
}

bool is_3_convex(const Graph& g) {
  for (const auto& b : branches(g))
    if (b.interior.size() < 2) return false;
  return true;
}

namespace {

// Multigraph on essential vertices whose edges are branches.
struct BranchGraph {
  std::vector<VertexId> verts;           // essential vertices
  std::vector<Branch> edges;
  std::vector<std::vector<int>> inc;     // vertex index -> incident branch ids
  std::map<VertexId, int> index;
};

BranchGraph branch_graph(const Graph& g) {
  BranchGraph bg;
  bg.verts = essential_vertices(g);
  for (std::size_t i = 0; i < bg.verts.size(); ++i) bg.index[bg.verts[i]] = static_cast<int>(i);
  bg.edges = branches(g);
  bg.inc.assign(bg.verts.size(), {});
  for (std::size_t e = 0; e < bg.edges.size(); ++e) {
    bg.inc[bg.index[bg.edges[e].u]].push_back(static_cast<int>(e));
    bg.inc[bg.index[bg.edges[e].v]].push_back(static_cast<int>(e));
  }
  return bg;
}

// Series-parallel reduction; a multigraph without a K4 minor reduces to nothing.
bool has_k4_minor(const BranchGraph& bg) {
  int n = static_cast<int>(bg.verts.size());
  std::vector<std::multiset<int>> adj(n);
  for (const auto& b : bg.edges) {
    int u = bg.index.at(b.u), v = bg.index.at(b.v);
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      // collapse parallel edges
      std::multiset<int> dedup;
      for (int w : adj[v])
        if (!dedup.count(w)) dedup.insert(w);
      if (dedup.size() != adj[v].size()) {
        for (int w : dedup) {
          while (adj[w].count(v) > 1) adj[w].erase(adj[w].find(v));
        }
        adj[v] = dedup;
        changed = true;
      }
      if (adj[v].size() <= 1) {
        for (int w : adj[v]) adj[w].erase(adj[w].find(v));
        adj[v].clear();
        alive[v] = 0;
        changed = true;
      } else if (adj[v].size() == 2) {
        int a = *adj[v].begin(), b = *std::next(adj[v].begin());
        adj[a].erase(adj[a].find(v));
        adj[b].erase(adj[b].find(v));
        adj[v].clear();
        alive[v] = 0;
        if (a != b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
        changed = true;
      }
    }
  }
  return std::any_of(alive.begin(), alive.end(), [](char c) { return c; });
}

struct K4Search {
  const Graph& g;
  const BranchGraph& bg;
  std::vector<char> used_vertex;  // essential index used in H
  std::vector<char> used_branch;
  std::array<int, 4> poles{};
  std::vector<std::pair<int, int>> pairs;

  bool induced_ok() const {
    for (std::size_t e = 0; e < bg.edges.size(); ++e) {
      const auto& b = bg.edges[e];
      if (!b.interior.empty() || used_branch[e]) continue;
      if (used_vertex[bg.index.at(b.u)] && used_vertex[bg.index.at(b.v)]) return false;
    }
    return true;
  }

  bool route(std::size_t k) {
    if (k == pairs.size()) return induced_ok();
    const int s = pairs[k].first, t = pairs[k].second;
    std::function<bool(int)> walk = [&](int cur) -> bool {
      for (int e : bg.inc[cur]) {
        if (used_branch[e]) continue;
        const auto& b = bg.edges[e];
        int other = bg.index.at(b.u) == cur ? bg.index.at(b.v) : bg.index.at(b.u);
        if (other == t) {
          used_branch[e] = 1;
          if (route(k + 1)) return true;
          used_branch[e] = 0;
          continue;
        }
        if (used_vertex[other]) continue;
        used_branch[e] = 1;
        used_vertex[other] = 1;
        if (walk(other)) return true;
        used_vertex[other] = 0;
        used_branch[e] = 0;
      }
      return false;
    };
    return walk(s);
  }

  std::optional<std::vector<VertexId>> run() {
    int n = static_cast<int>(bg.verts.size());
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(bg.inc[v].size());
    used_vertex.assign(n, 0);
    used_branch.assign(bg.edges.size(), 0);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            if (deg[a] < 3 || deg[b] < 3 || deg[c] < 3 || deg[d] < 3) continue;
            poles = {a, b, c, d};
            pairs.clear();
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j) pairs.emplace_back(poles[i], poles[j]);
            for (int p : poles) used_vertex[p] = 1;
            if (route(0)) return collect();
            for (int p : poles) used_vertex[p] = 0;
          }
    return std::nullopt;
  }

  std::vector<VertexId> collect() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < bg.verts.size(); ++i)
      if (used_vertex[i]) out.push_back(bg.verts[i]);
    for (std::size_t e = 0; e < bg.edges.size(); ++e)
      if (used_branch[e]) out.insert(out.end(), bg.edges[e].interior.begin(), bg.edges[e].interior.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

std::optional<std::vector<VertexId>> find_induced_subdivided_k4(const Graph& g) {
  BranchGraph bg = branch_graph(g);
  if (bg.verts.size() < 4 || !has_k4_minor(bg)) return std::nullopt;
  K4Search s{g, bg, {}, {}, {}, {}};
  return s.run();
}

const CheckResult& ValidationReport::check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InvalidInput("no such check: " + std::string(name));
}

ValidationReport validate(const Graph& g) {
  ValidationReport r;
  const int n = g.size();
  auto fail = [&](std::string name, std::vector<VertexId> w) {
    r.checks.push_back({std::move(name), false, g.names_of(w)});
  };
  auto pass = [&](std::string name) { r.checks.push_back({std::move(name), true, std::nullopt}); };

  {  // triangles
    std::optional<std::vector<VertexId>> tri;
    for (auto [u, v] : g.edges()) {
      for (auto w : g.neighbors(u))
        if (w > v && g.adjacent(v, w)) {
          tri = std::vector<VertexId>{u, v, w};
          break;
        }
      if (tri) break;
    }
    tri ? fail("triangle_free", *tri) : pass("triangle_free");
  }
  {  // induced 4-cycles
    std::optional<std::vector<VertexId>> sq;
    for (VertexId u = 0; u < n && !sq; ++u)
      for (VertexId v = u + 1; v < n && !sq; ++v) {
        if (g.adjacent(u, v)) continue;
        std::vector<VertexId> common;
        std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                              g.neighbors(v).end(), std::back_inserter(common));
        for (std::size_t i = 0; i < common.size() && !sq; ++i)
          for (std::size_t j = i + 1; j < common.size(); ++j)
            if (!g.adjacent(common[i], common[j])) {
              sq = std::vector<VertexId>{u, common[i], v, common[j]};
              break;
            }
      }
    sq ? fail("square_free", *sq) : pass("square_free");
  }
  std::vector<char> none(n, 0);
  auto comps = components(g, none);
  if (comps.size() <= 1) pass("connected");
  else fail("connected", {comps[0][0], comps[1][0]});

  {
    std::optional<VertexId> cut;
    for (VertexId v = 0; v < n && !cut; ++v) {
      auto rm = none;
      rm[v] = 1;
      if (component_count(g, rm) >= 2) cut = v;
    }
    cut ? fail("no_separating_vertex", {*cut}) : pass("no_separating_vertex");
  }
  {
    std::optional<std::pair<VertexId, VertexId>> cut;
    for (auto [u, v] : g.edges()) {
      auto rm = none;
      rm[u] = rm[v] = 1;
      if (component_count(g, rm) >= 2) {
        cut = std::make_pair(u, v);
        break;
      }
    }
    cut ? fail("no_separating_edge", {cut->first, cut->second}) : pass("no_separating_edge");
  }
  {
    PairComponents pc(g);
    bool found = false;
    for (VertexId u = 0; u < n && !found; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (pc.vertex_components(u, v) >= 2) {
          found = true;
          break;
        }
    found ? pass("has_cut_pair") : fail("has_cut_pair", {});
  }
  {
    bool cycle = n >= 5 && comps.size() == 1 && g.edge_count() == n;
    for (VertexId v = 0; v < n && cycle; ++v) cycle = g.degree(v) == 2;
    if (cycle) {
      std::vector<VertexId> all(n);
      std::iota(all.begin(), all.end(), 0);
      fail("not_long_cycle", all);
    } else {
      pass("not_long_cycle");
    }
  }
  if (auto k4 = find_induced_subdivided_k4(g)) fail("no_subdivided_k4", *k4);
  else pass("no_subdivided_k4");

  {
    std::optional<Branch> shortb;
    for (const auto& b : branches(g))
      if (b.interior.size() < 2) {
        shortb = b;
        break;
      }
    if (shortb) {
      std::vector<VertexId> w{shortb->u};
      w.insert(w.end(), shortb->interior.begin(), shortb->interior.end());
      w.push_back(shortb->v);
      fail("three_convex", w);
    } else {
      pass("three_convex");
    }
  }
  r.in_G = std::all_of(r.checks.begin(), r.checks.end(),
                       [](const CheckResult& c) { return c.name == "three_convex" || c.passed; });
  r.in_G_3convex = r.in_G && r.check("three_convex").passed;
  return r;
}

}  // namespace racgc
