#include "racgc/bipartite.hpp"

#include "racgc/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace racgc {

using nlohmann::json;

int BipartiteGraph::add_vertex(std::string name, int type) {
  if (type != 1 && type != 2) throw InvalidInput("vertex type must be 1 or 2");
  vertices.push_back({std::move(name), type});
  return size() - 1;
}

int BipartiteGraph::add_edge(int x, int y) {
  if (type(x) == 2) std::swap(x, y);
  if (type(x) != 1 || type(y) != 2) throw InvalidInput("edges must join a Type-1 and a Type-2 vertex");
  edges.push_back({x, y});
  return static_cast<int>(edges.size()) - 1;
}

int BipartiteGraph::find(const std::string& name) const {
  for (int v = 0; v < size(); ++v)
    if (vertices[v].name == name) return v;
  return -1;
}

std::vector<int> BipartiteGraph::star(int v) const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].x == v || edges[e].y == v) out.push_back(static_cast<int>(e));
  return out;
}

std::vector<int> BipartiteGraph::of_type(int t) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (type(v) == t) out.push_back(v);
  return out;
}

static std::vector<std::vector<int>> neighbour_lists(const BipartiteGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (const auto& e : g.edges) {
    adj[e.x].push_back(e.y);
    adj[e.y].push_back(e.x);
  }
  return adj;
}

static std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int s) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool BipartiteGraph::connected() const {
  if (vertices.empty()) return true;
  auto d = bfs(neighbour_lists(*this), 0);
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

bool BipartiteGraph::is_tree() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges)
    if (!seen.insert({e.x, e.y}).second) return false;
  return connected() && static_cast<int>(edges.size()) == size() - 1;
}

int BipartiteGraph::diameter() const {
  auto adj = neighbour_lists(*this);
  int best = 0;
  for (int v = 0; v < size(); ++v) {
    auto d = bfs(adj, v);
    for (int x : d) {
      if (x < 0) throw InvalidInput("diameter of a disconnected graph");
      best = std::max(best, x);
    }
  }
  return best;
}

json bipartite_to_json(const BipartiteGraph& g) {
  json t1 = json::array(), t2 = json::array(), es = json::array();
  for (const auto& v : g.vertices) (v.type == 1 ? t1 : t2).push_back(v.name);
  for (const auto& e : g.edges) es.push_back({g.vertices[e.x].name, g.vertices[e.y].name});
  return {{"format", "bipartite/1"}, {"type1", t1}, {"type2", t2}, {"edges", es}};
}

BipartiteGraph bipartite_from_json(const json& j) {
  try {
    if (j.contains("format") && j.at("format") != "bipartite/1")
      throw InvalidInput("unsupported bipartite format " + j.at("format").dump());
    BipartiteGraph g;
    std::map<std::string, int> ids;
    auto add = [&](const std::string& n, int t) {
      if (ids.count(n)) throw InvalidInput("duplicate vertex '" + n + "'");
      ids[n] = g.add_vertex(n, t);
    };
    for (const auto& n : j.at("type1")) add(n.get<std::string>(), 1);
    for (const auto& n : j.at("type2")) add(n.get<std::string>(), 2);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair");
      auto a = e[0].get<std::string>(), b = e[1].get<std::string>();
      if (!ids.count(a) || !ids.count(b)) throw InvalidInput("edge endpoint is not a vertex");
      g.add_edge(ids[a], ids[b]);
    }
    return g;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad bipartite graph JSON: ") + e.what());
  }
}

bool is_isomorphism(const BipartiteGraph& a, const BipartiteGraph& b, const std::vector<int>& map) {
  if (a.size() != b.size() || a.edges.size() != b.edges.size()) return false;
  if (static_cast<int>(map.size()) != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (int v = 0; v < a.size(); ++v) {
    int w = map[v];
    if (w < 0 || w >= b.size() || hit[w] || a.type(v) != b.type(w)) return false;
    hit[w] = 1;
  }
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : a.edges) ++count[{map[e.x], map[e.y]}];
  for (const auto& e : b.edges) --count[{e.x, e.y}];
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

using Adj = std::vector<std::vector<std::pair<int, int>>>;  // (neighbour, multiplicity)

Adj multiplicity_lists(const BipartiteGraph& g) {
  std::vector<std::map<int, int>> m(g.size());
  for (const auto& e : g.edges) {
    ++m[e.x][e.y];
    ++m[e.y][e.x];
  }
  Adj adj(g.size());
  for (int v = 0; v < g.size(); ++v)
    for (auto [w, k] : m[v]) adj[v].emplace_back(w, k);
  return adj;
}

struct IsoSearch {
  const BipartiteGraph& a;
  const BipartiteGraph& b;
  Adj adj_a, adj_b;

  // Joint colour refinement so colour ids are comparable across graphs.
  void refine(std::vector<int>& ca, std::vector<int>& cb) const {
    auto classes = [](const std::vector<int>& x, const std::vector<int>& y) {
      std::set<int> s(x.begin(), x.end());
      s.insert(y.begin(), y.end());
      return s.size();
    };
    std::size_t before = classes(ca, cb);
    while (true) {
      std::map<std::vector<long long>, int> ids;
      auto sig = [&](const Adj& adj, const std::vector<int>& c, int v) {
        std::vector<long long> s{c[v]};
        std::vector<std::pair<int, int>> nb;
        for (auto [w, k] : adj[v]) nb.emplace_back(c[w], k);
        std::sort(nb.begin(), nb.end());
        for (auto [cw, k] : nb) {
          s.push_back(cw);
          s.push_back(k);
        }
        return s;
      };
      std::vector<std::vector<long long>> sa, sb;
      for (int v = 0; v < a.size(); ++v) sa.push_back(sig(adj_a, ca, v));
      for (int v = 0; v < b.size(); ++v) sb.push_back(sig(adj_b, cb, v));
      for (auto& s : sa) ids.emplace(s, 0);
      for (auto& s : sb) ids.emplace(s, 0);
      int next = 0;
      for (auto& kv : ids) kv.second = next++;
      for (int v = 0; v < a.size(); ++v) ca[v] = ids[sa[v]];
      for (int v = 0; v < b.size(); ++v) cb[v] = ids[sb[v]];
      std::size_t after = classes(ca, cb);
      if (after == before) break;
      before = after;
    }
  }

  std::optional<std::vector<int>> search(std::vector<int> ca, std::vector<int> cb) const {
    refine(ca, cb);
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> cls;
    for (int v = 0; v < a.size(); ++v) cls[ca[v]].first.push_back(v);
    for (int v = 0; v < b.size(); ++v) cls[cb[v]].second.push_back(v);
    const std::pair<std::vector<int>, std::vector<int>>* pick = nullptr;
    int pick_colour = -1;
    for (const auto& [c, p] : cls) {
      if (p.first.size() != p.second.size()) return std::nullopt;
      if (p.first.size() > 1 && (!pick || p.first.size() < pick->first.size())) {
        pick = &p;
        pick_colour = c;
      }
    }
    if (!pick) {
      std::vector<int> map(a.size());
      for (const auto& [c, p] : cls) map[p.first[0]] = p.second[0];
      if (is_isomorphism(a, b, map)) return map;
      return std::nullopt;
    }
    (void)pick_colour;
    int fresh = static_cast<int>(cls.size()) + 1;
    int v = pick->first[0];
    for (int w : pick->second) {
      auto na = ca, nb = cb;
      na[v] = fresh;
      nb[w] = fresh;
      if (auto m = search(std::move(na), std::move(nb))) return m;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const BipartiteGraph& a, const BipartiteGraph& b,
                                                 const std::vector<std::string>& colour_a,
                                                 const std::vector<std::string>& colour_b) {
  if (a.size() != b.size() || a.edges.size() != b.edges.size()) return std::nullopt;
  auto label = [](const BipartiteGraph& g, const std::vector<std::string>& col, int v) {
    return std::to_string(g.type(v)) + "|" + (col.empty() ? std::string() : col.at(v));
  };
  std::map<std::string, int> ids;
  for (int v = 0; v < a.size(); ++v) ids.emplace(label(a, colour_a, v), 0);
  for (int v = 0; v < b.size(); ++v) ids.emplace(label(b, colour_b, v), 0);
  int next = 0;
  for (auto& kv : ids) kv.second = next++;
  std::vector<int> ca(a.size()), cb(b.size());
  for (int v = 0; v < a.size(); ++v) ca[v] = ids[label(a, colour_a, v)];
  for (int v = 0; v < b.size(); ++v) cb[v] = ids[label(b, colour_b, v)];
  IsoSearch s{a, b, multiplicity_lists(a), multiplicity_lists(b)};
  return s.search(std::move(ca), std::move(cb));
}

}  // namespace racgc
