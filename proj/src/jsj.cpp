#include "racgc/jsj.hpp"

#include "racgc/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace racgc {

using nlohmann::json;

namespace {

void require_supported(const Graph& g) {
  auto rep = validate(g);
  if (!rep.in_G_3convex) {
    std::string failed;
    for (const auto& c : rep.checks)
      if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
    throw Unsupported("graph is not a 3-convex member of the supported class (failed: " + failed + ")");
  }
}

std::vector<std::pair<VertexId, VertexId>> pairs_from(const Graph& g, const PairComponents& pc) {
  std::vector<std::pair<VertexId, VertexId>> out;
  auto ess = essential_vertices(g);
  for (std::size_t i = 0; i < ess.size(); ++i)
    for (std::size_t j = i + 1; j < ess.size(); ++j)
      if (pc.realization(ess[i], ess[j]) >= 3) out.emplace_back(ess[i], ess[j]);
  return out;
}

// Bron-Kerbosch with pivoting over the separation relation.
void maximal_cliques(const std::vector<std::vector<char>>& rel, std::vector<int>& R, std::vector<int> P,
                     std::vector<int> X, std::vector<std::vector<int>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* S : {&P, &X})
    for (int u : *S) {
      std::size_t c = 0;
      for (int v : P) c += rel[u][v];
      if (pivot < 0 || c > best) {
        pivot = u;
        best = c;
      }
    }
  std::vector<int> cand;
  for (int v : P)
    if (!rel[pivot][v]) cand.push_back(v);
  for (int v : cand) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (rel[v][w]) P2.push_back(w);
    for (int w : X)
      if (rel[v][w]) X2.push_back(w);
    R.push_back(v);
    maximal_cliques(rel, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

bool two_ended_or_finite(const Graph& g, const std::vector<VertexId>& A) {
  if (A.size() <= 2) return true;
  if (A.size() == 3) {
    int e = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) e += g.adjacent(A[i], A[j]);
    return e >= 2;  // path (D_inf x Z/2) or triangle (finite)
  }
  return false;
}

std::vector<std::vector<VertexId>> sets_from(const Graph& g, const PairComponents& pc,
                                             const std::vector<std::pair<VertexId, VertexId>>& t1) {
  const int n = g.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (pc.realization(x, y) >= 2) rel[x][y] = rel[y][x] = 1;
  std::vector<int> R, P(n);
  for (int i = 0; i < n; ++i) P[i] = i;
  std::vector<std::vector<int>> cliques;
  maximal_cliques(rel, R, P, {}, cliques);
  std::vector<std::vector<VertexId>> out;
  for (auto& c : cliques) {
    std::sort(c.begin(), c.end());
    if (two_ended_or_finite(g, c)) continue;
    bool has_pair = std::any_of(t1.begin(), t1.end(), [&](const auto& p) {
      return std::binary_search(c.begin(), c.end(), p.first) && std::binary_search(c.begin(), c.end(), p.second);
    });
    if (has_pair) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool induced_cycle(const Graph& g, const std::vector<VertexId>& cyc) {
  std::set<VertexId> s(cyc.begin(), cyc.end());
  if (s.size() != cyc.size() || cyc.size() < 4) return false;
  int e = 0;
  for (auto [u, v] : g.edges()) e += s.count(u) && s.count(v);
  if (e != static_cast<int>(cyc.size())) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

// Induced cycle through every vertex of A, as a vertex sequence.
std::optional<std::vector<VertexId>> cycle_through(const Graph& g, const std::vector<VertexId>& A,
                                                   const std::vector<Branch>& bs) {
  std::set<VertexId> inA(A.begin(), A.end());
  std::vector<VertexId> ess;
  for (auto v : A)
    if (g.essential(v)) ess.push_back(v);
  if (ess.size() < 2) return std::nullopt;
  std::vector<const Branch*> cand, forced;
  for (const auto& b : bs) {
    if (!inA.count(b.u) || !inA.count(b.v)) continue;
    bool all_in = !b.interior.empty() &&
                  std::all_of(b.interior.begin(), b.interior.end(), [&](VertexId x) { return inA.count(x); });
    if (all_in) {
      forced.push_back(&b);
      cand.push_back(&b);
    }
  }
  // outside connections: shortest path between two essentials of A whose
  // interior avoids A (a branch, or a route through neighbouring pieces)
  std::deque<Branch> outside;
  for (std::size_t i = 0; i < ess.size(); ++i)
    for (std::size_t k = i + 1; k < ess.size(); ++k) {
      VertexId u = ess[i], v = ess[k];
      std::vector<int> prev(g.size(), -2);
      std::queue<VertexId> q;
      prev[u] = -1;
      q.push(u);
      while (!q.empty() && prev[v] == -2) {
        VertexId x = q.front();
        q.pop();
        for (auto y : g.neighbors(x)) {
          if (prev[y] != -2 || (inA.count(y) && y != v)) continue;
          prev[y] = x;
          if (y != v) q.push(y);
        }
      }
      if (prev[v] == -2) continue;
      Branch b{std::min(u, v), std::max(u, v), {}};
      std::vector<VertexId> path;
      for (VertexId x = prev[v]; x != u; x = prev[x]) path.push_back(x);
      // path runs from v back to u
      if (b.u == u) b.interior.assign(path.rbegin(), path.rend());
      else b.interior = path;
      outside.push_back(std::move(b));
      cand.push_back(&outside.back());
    }
  auto expand = [&](const std::vector<std::pair<const Branch*, VertexId>>& walk) {
    std::vector<VertexId> cyc;
    for (auto [b, from] : walk) {
      cyc.push_back(from);
      if (from == b->u) cyc.insert(cyc.end(), b->interior.begin(), b->interior.end());
      else cyc.insert(cyc.end(), b->interior.rbegin(), b->interior.rend());
    }
    return cyc;
  };
  if (ess.size() == 2) {
    // A is a branch: close it up with a shortest path avoiding its interior.
    if (forced.size() != 1) return std::nullopt;
    const Branch& b = *forced[0];
    std::vector<int> prev(g.size(), -2);
    std::queue<VertexId> q;
    for (auto x : b.interior) prev[x] = -3;
    prev[b.v] = -1;
    q.push(b.v);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      if (x == b.u) break;
      for (auto y : g.neighbors(x))
        if (prev[y] == -2) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[b.u] < -1) return std::nullopt;
    std::vector<VertexId> cyc{b.u};
    cyc.insert(cyc.end(), b.interior.begin(), b.interior.end());
    cyc.push_back(b.v);
    std::vector<VertexId> back;
    for (VertexId x = prev[b.u]; x != b.v; x = prev[x]) back.push_back(x);
    cyc.insert(cyc.end(), back.rbegin(), back.rend());
    if (induced_cycle(g, cyc)) return cyc;
    return std::nullopt;
  }
  std::map<VertexId, std::vector<const Branch*>> inc;
  for (auto* b : cand) {
    inc[b->u].push_back(b);
    inc[b->v].push_back(b);
  }
  std::set<VertexId> visited{ess[0]};
  std::vector<std::pair<const Branch*, VertexId>> walk;
  std::optional<std::vector<VertexId>> found;
  std::function<void(VertexId)> dfs = [&](VertexId cur) {
    if (found) return;
    for (auto* b : inc[cur]) {
      if (found) return;
      VertexId nxt = b->u == cur ? b->v : b->u;
      bool closing = nxt == ess[0] && visited.size() == ess.size();
      if (!closing && visited.count(nxt)) continue;
      if (!walk.empty() && walk.back().first == b) continue;
      walk.emplace_back(b, cur);
      if (closing) {
        bool all_forced = std::all_of(forced.begin(), forced.end(), [&](const Branch* f) {
          return std::any_of(walk.begin(), walk.end(), [&](const auto& st) { return st.first == f; });
        });
        auto cyc = expand(walk);
        if (all_forced && induced_cycle(g, cyc)) found = cyc;
      } else {
        visited.insert(nxt);
        dfs(nxt);
        visited.erase(nxt);
      }
      walk.pop_back();
    }
  };
  dfs(ess[0]);
  return found;
}

void check_lemmas(const Graph& g, const PairComponents& pc, JsjGraph& j) {
  auto bs = branches(g);
  std::map<std::vector<VertexId>, const Branch*> branch_sets;
  for (const auto& b : bs) {
    std::vector<VertexId> s{b.u, b.v};
    s.insert(s.end(), b.interior.begin(), b.interior.end());
    std::sort(s.begin(), s.end());
    branch_sets[s] = &b;
  }
  auto fail = [](const std::string& what) { throw InvariantFailure("graph outside supported family: " + what); };
  for (std::size_t i = 0; i < j.type1.size(); ++i) {
    auto [a, b] = j.type1[i];
    int k = pc.realization(a, b);
    if (j.valence1(static_cast<int>(i)) != k || k < 3)
      fail("Type-1 vertex {" + g.name(a) + "," + g.name(b) + "} has valence " +
           std::to_string(j.valence1(static_cast<int>(i))) + " but separates into " + std::to_string(k));
  }
  j.cyclic_orders.clear();
  for (std::size_t t = 0; t < j.type2.size(); ++t) {
    const auto& A = j.type2[t];
    int L = essential_count(g, A);
    if (L < 2) fail("Type-2 set with fewer than two essential vertices");
    auto it = branch_sets.find(A);
    if ((L == 2) != (it != branch_sets.end())) fail("Type-2 set with L = 2 that is not a branch, or vice versa");
    if (it != branch_sets.end() && pc.realization(it->second->u, it->second->v) < 3)
      fail("branch set whose endpoints separate into fewer than three components");
    {
      std::vector<VertexId> Av(A);
      Graph sub = induced_subgraph(g, Av);
      bool cyc = sub.size() >= 4 && sub.edge_count() == sub.size();
      for (int v = 0; v < sub.size() && cyc; ++v) cyc = sub.degree(v) == 2;
      if (cyc) fail("Type-2 set spans an induced cycle");
    }
    auto sigma = cycle_through(g, A, bs);
    if (!sigma) fail("no induced cycle through a Type-2 set");
    std::set<VertexId> inA(A.begin(), A.end());
    std::vector<VertexId> order, ess_order;
    for (auto v : *sigma)
      if (inA.count(v)) order.push_back(v);
    if (order.size() != A.size()) fail("induced cycle misses part of a Type-2 set");
    for (auto v : order)
      if (g.essential(v)) ess_order.push_back(v);
    const std::size_t m = ess_order.size();
    auto consecutive = [&](VertexId p, VertexId q) {
      for (std::size_t i = 0; i < m; ++i) {
        VertexId x = ess_order[i], y = ess_order[(i + 1) % m];
        if ((x == p && y == q) || (x == q && y == p)) return true;
      }
      return false;
    };
    for (auto [e1, e2] : j.edges)
      if (e2 == static_cast<int>(t) && !consecutive(j.type1[e1].first, j.type1[e1].second))
        fail("Type-1 pair not consecutive in the cyclic order of its Type-2 set");
    if (m >= 3) {
      // position of each A vertex along the order, to see what lies between essentials
      for (std::size_t i = 0; i < m; ++i) {
        VertexId p = ess_order[i], q = ess_order[(i + 1) % m];
        auto ip = std::find(order.begin(), order.end(), p) - order.begin();
        auto iq = std::find(order.begin(), order.end(), q) - order.begin();
        long gap = ((iq - ip) % static_cast<long>(order.size()) + static_cast<long>(order.size())) %
                   static_cast<long>(order.size());
        int k = pc.realization(p, q);
        if (k < 2) fail("consecutive essential vertices do not separate");
        if (gap > 1 && k != 2) fail("trivial branch between essential vertices with more than two components");
        if (gap == 1 && k < 3) fail("consecutive essential pair with a single connecting branch");
      }
    }
    j.cyclic_orders.push_back(order);
  }
}

}  // namespace

int essential_count(const Graph& g, const std::vector<VertexId>& A) {
  return static_cast<int>(std::count_if(A.begin(), A.end(), [&](VertexId v) { return g.essential(v); }));
}

int JsjGraph::valence1(int i) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == i; }));
}

int JsjGraph::valence2(int j) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.second == j; }));
}

BipartiteGraph JsjGraph::to_bipartite() const {
  BipartiteGraph b;
  for (std::size_t i = 0; i < type1.size(); ++i) b.add_vertex("x" + std::to_string(i), 1);
  for (std::size_t j = 0; j < type2.size(); ++j) b.add_vertex("y" + std::to_string(j), 2);
  for (auto [i, j] : edges) b.add_edge(i, static_cast<int>(type1.size()) + j);
  return b;
}

std::vector<std::pair<VertexId, VertexId>> type1_pairs(const Graph& g) {
  require_supported(g);
  PairComponents pc(g);
  return pairs_from(g, pc);
}

std::vector<std::vector<VertexId>> type2_sets(const Graph& g) {
  require_supported(g);
  PairComponents pc(g);
  return sets_from(g, pc, pairs_from(g, pc));
}

JsjGraph jsj_decomposition(const Graph& g) {
  require_supported(g);
  PairComponents pc(g);
  JsjGraph j;
  j.type1 = pairs_from(g, pc);
  j.type2 = sets_from(g, pc, j.type1);
  for (std::size_t i = 0; i < j.type1.size(); ++i)
    for (std::size_t t = 0; t < j.type2.size(); ++t) {
      const auto& A = j.type2[t];
      if (std::binary_search(A.begin(), A.end(), j.type1[i].first) &&
          std::binary_search(A.begin(), A.end(), j.type1[i].second))
        j.edges.emplace_back(static_cast<int>(i), static_cast<int>(t));
    }
  if (!j.to_bipartite().is_tree()) throw InvariantFailure("graph outside supported family: JSJ graph is not a tree");
  check_lemmas(g, pc, j);
  return j;
}

int jsj_diameter(const JsjGraph& j) { return j.to_bipartite().diameter(); }

json jsj_to_json(const Graph& g, const JsjGraph& j) {
  json t1 = json::array(), t2 = json::array(), es = json::array();
  for (std::size_t i = 0; i < j.type1.size(); ++i)
    t1.push_back({{"id", "x" + std::to_string(i)},
                  {"pair", {g.name(j.type1[i].first), g.name(j.type1[i].second)}}});
  for (std::size_t t = 0; t < j.type2.size(); ++t) {
    json o = {{"id", "y" + std::to_string(t)},
              {"A", g.names_of(j.type2[t])},
              {"essential", essential_count(g, j.type2[t])}};
    if (t < j.cyclic_orders.size()) o["cyclic_order"] = g.names_of(j.cyclic_orders[t]);
    t2.push_back(o);
  }
  for (auto [a, b] : j.edges) es.push_back({"x" + std::to_string(a), "y" + std::to_string(b)});
  return {{"type1", t1}, {"type2", t2}, {"edges", es}, {"diameter", jsj_diameter(j)}};
}

}  // namespace racgc
