#include "racgc/amalgam.hpp"

#include "racgc/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace racgc {

using nlohmann::json;

std::string Surface::str() const { return "S_{" + genus.str() + "," + boundary.str() + "}"; }

Surface SurfaceAmalgam::surface(int j) const {
  return Surface{type2[j].genus, static_cast<long long>(type2[j].boundary.size())};
}

BipartiteGraph SurfaceAmalgam::graph() const {
  BipartiteGraph g;
  std::map<std::string, int> id;
  for (const auto& c : type1) id[c] = g.add_vertex(c, 1);
  for (const auto& p : type2) {
    int y = g.add_vertex(p.id, 2);
    for (const auto& c : p.boundary) {
      auto it = id.find(c);
      if (it == id.end()) throw InvalidInput("surface '" + p.id + "' glued to unknown circle '" + c + "'");
      g.add_edge(it->second, y);
    }
  }
  return g;
}

std::vector<std::string> SurfaceAmalgam::problems() const {
  std::vector<std::string> out;
  std::set<std::string> names;
  for (const auto& c : type1)
    if (!names.insert(c).second) out.push_back("duplicate id '" + c + "'");
  for (const auto& p : type2)
    if (!names.insert(p.id).second) out.push_back("duplicate id '" + p.id + "'");
  std::map<std::string, int> valence;
  for (const auto& c : type1) valence[c] = 0;
  for (const auto& p : type2) {
    if (p.genus < 0) out.push_back("surface '" + p.id + "' has negative genus");
    if (p.boundary.empty()) out.push_back("surface '" + p.id + "' has no boundary");
    Surface s{p.genus, static_cast<long long>(p.boundary.size())};
    if (s.euler() >= 0) out.push_back("surface '" + p.id + "' = " + s.str() + " has non-negative euler characteristic");
    for (const auto& c : p.boundary) {
      if (!valence.count(c)) out.push_back("surface '" + p.id + "' glued to unknown circle '" + c + "'");
      else ++valence[c];
    }
  }
  for (const auto& [c, v] : valence)
    if (v < 3) out.push_back("circle '" + c + "' has valence " + std::to_string(v) + " < 3");
  if (out.empty() && !graph().connected()) out.push_back("amalgam is disconnected");
  if (type2.empty()) out.push_back("no surfaces");
  return out;
}

void SurfaceAmalgam::validate() const {
  auto p = problems();
  if (!p.empty()) throw InvalidInput("invalid surface amalgam: " + p.front());
}

Rational amalgam_euler(const SurfaceAmalgam& x) {
  x.validate();
  Integer s = 0;
  for (std::size_t j = 0; j < x.type2.size(); ++j) s += x.surface(static_cast<int>(j)).euler();
  return Rational(s);
}

json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(n));
  return json(n.str());
}

static Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) throw InvalidInput("bad integer " + s);
    return Integer(s);
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

json amalgam_to_json(const SurfaceAmalgam& x) {
  json t2 = json::array();
  for (const auto& p : x.type2) t2.push_back({{"id", p.id}, {"genus", integer_json(p.genus)}, {"boundary", p.boundary}});
  return {{"format", "amalgam/1"}, {"type1", x.type1}, {"type2", t2}};
}

SurfaceAmalgam amalgam_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidInput("amalgam JSON must be an object");
    if (j.contains("format") && j.at("format") != "amalgam/1")
      throw InvalidInput("unsupported amalgam format " + j.at("format").dump());
    SurfaceAmalgam x;
    x.type1 = j.at("type1").get<std::vector<std::string>>();
    for (const auto& p : j.at("type2"))
      x.type2.push_back({p.at("id").get<std::string>(), integer_from_json(p.at("genus")),
                         p.at("boundary").get<std::vector<std::string>>()});
    return x;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad amalgam JSON: ") + e.what());
  }
}

SurfaceAmalgam load_amalgam(const std::string& spec) {
  std::string text = spec;
  if (spec.empty() || spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw InvalidInput("cannot read '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return amalgam_from_json(json::parse(text));
  } catch (const json::parse_error&) {
    throw InvalidInput("'" + spec + "' is not valid JSON");
  }
}

std::optional<std::vector<int>> amalgam_homeomorphism(const SurfaceAmalgam& a, const SurfaceAmalgam& b) {
  auto ga = a.graph(), gb = b.graph();
  auto colours = [](const SurfaceAmalgam& x, const BipartiteGraph& g) {
    std::vector<std::string> c(g.size());
    for (std::size_t j = 0; j < x.type2.size(); ++j) c[x.type1.size() + j] = x.type2[j].genus.str();
    return c;
  };
  return find_isomorphism(ga, gb, colours(a, ga), colours(b, gb));
}

std::vector<std::string> half_covering_violations(const HalfCovering& h) {
  std::vector<std::string> out;
  const auto& S = h.source;
  const auto& T = h.target;
  if (static_cast<int>(h.vertex_map.size()) != S.size()) return {"vertex map has wrong length"};
  if (h.edge_map.size() != S.edges.size()) return {"edge map has wrong length"};
  for (int v = 0; v < S.size(); ++v) {
    int w = h.vertex_map[v];
    if (w < 0 || w >= T.size()) return {"vertex map leaves the target"};
    if (S.type(v) != T.type(w))
      out.push_back("(1) " + S.vertices[v].name + " changes type");
  }
  for (std::size_t e = 0; e < S.edges.size(); ++e) {
    int f = h.edge_map[e];
    if (f < 0 || f >= static_cast<int>(T.edges.size())) return {"edge map leaves the target"};
    const auto& se = S.edges[e];
    const auto& te = T.edges[f];
    if (h.vertex_map[se.x] != te.x || h.vertex_map[se.y] != te.y)
      out.push_back("edge " + std::to_string(e) + " is not mapped compatibly with its endpoints");
  }
  if (!out.empty()) return out;
  for (int v = 0; v < S.size(); ++v) {
    auto src = S.star(v);
    auto tgt = T.star(h.vertex_map[v]);
    std::multiset<int> images;
    for (int e : src) images.insert(h.edge_map[e]);
    std::set<int> distinct(images.begin(), images.end());
    bool onto = std::all_of(tgt.begin(), tgt.end(), [&](int f) { return distinct.count(f) > 0; });
    if (S.type(v) == 1) {
      if (distinct.size() != images.size() || !onto)
        out.push_back("(2) star of Type-1 vertex " + S.vertices[v].name + " is not mapped bijectively");
    } else if (!onto) {
      out.push_back("(3) star of Type-2 vertex " + S.vertices[v].name + " is not mapped onto");
    }
  }
  return out;
}

HalfCovering build_H(const BipartiteGraph& t) {
  if (!t.is_tree()) throw InvalidInput("build_H needs a bipartite tree");
  HalfCovering h;
  h.target = t;
  std::vector<std::pair<int, int>> copy(t.size(), {-1, -1});
  for (int v = 0; v < t.size(); ++v) {
    const auto& n = t.vertices[v].name;
    if (t.type(v) == 1) {
      copy[v].first = h.source.add_vertex(n + "'", 1);
      h.vertex_map.push_back(v);
      copy[v].second = h.source.add_vertex(n + "''", 1);
      h.vertex_map.push_back(v);
    } else {
      copy[v].first = h.source.add_vertex(n, 2);
      h.vertex_map.push_back(v);
    }
  }
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto& te = t.edges[e];
    h.source.add_edge(copy[te.x].first, copy[te.y].first);
    h.edge_map.push_back(static_cast<int>(e));
    h.source.add_edge(copy[te.x].second, copy[te.y].first);
    h.edge_map.push_back(static_cast<int>(e));
  }
  return h;
}

DegreeMultiset degrees(const std::vector<long long>& ds) {
  DegreeMultiset m;
  for (auto d : ds) m.push_back({Integer(d), 1});
  return m;
}

Integer multiset_sum(const DegreeMultiset& m) {
  Integer s = 0;
  for (const auto& r : m) s += r.degree * r.count;
  return s;
}

Integer multiset_size(const DegreeMultiset& m) {
  Integer s = 0;
  for (const auto& r : m) s += r.count;
  return s;
}

static bool pos_genus_shape(const CoverCertificate& c) {
  if (c.degree != 3 || c.cover.genus != 3 * c.base.genus + c.base.boundary - 2) return false;
  for (const auto& m : c.boundary_degrees)
    if (m.size() != 1 || m[0].degree != 3 || m[0].count != 1) return false;
  return true;
}

std::vector<std::string> surface_cover_violations(const CoverCertificate& c) {
  std::vector<std::string> out;
  if (c.degree < 1) out.push_back("degree must be positive");
  if (c.cover.euler() != c.degree * c.base.euler())
    out.push_back("euler characteristic is not multiplicative: " + c.cover.str() + " over " + c.base.str() +
                  " at degree " + c.degree.str());
  if (Integer(c.boundary_degrees.size()) != c.base.boundary)
    out.push_back("need one degree multiset per boundary component of the base");
  Integer b = 0;
  for (const auto& m : c.boundary_degrees) {
    for (const auto& r : m)
      if (r.degree < 1 || r.count < 1) out.push_back("boundary degrees must be positive");
    if (multiset_sum(m) != c.degree) out.push_back("a boundary degree multiset does not sum to the degree");
    b += multiset_size(m);
  }
  if (b != c.cover.boundary) out.push_back("boundary count of the cover disagrees with the degree data");
  if (c.cover.genus < 0) out.push_back("negative genus");
  bool justified = false;
  if (c.base.genus > 0 && c.base.boundary > 0)
    justified = ((c.cover.boundary - c.degree * c.base.euler()) % 2) == 0;
  if (pos_genus_shape(c)) justified = true;
  if (c.degree == 1 && c.cover == c.base) justified = true;
  if (!justified) out.push_back("no existence criterion applies to " + c.cover.str() + " -> " + c.base.str());
  return out;
}

CoverCertificate pos_genus_cover(const Surface& s) {
  if (s.euler() >= 0) throw InvalidInput("pos_genus_cover needs negative euler characteristic, got " + s.str());
  if (s.boundary < 1) throw InvalidInput("pos_genus_cover needs nonempty boundary");
  CoverCertificate c;
  c.base = s;
  c.degree = 3;
  c.cover = Surface{3 * s.genus + s.boundary - 2, s.boundary};
  for (Integer i = 0; i < s.boundary; ++i) c.boundary_degrees.push_back({{3, 1}});
  return c;
}

std::optional<Surface> neumann_cover(const Surface& s, const Integer& D, const std::vector<DegreeMultiset>& specs) {
  if (s.genus <= 0) throw InvalidInput("neumann_cover needs positive genus; compose with pos_genus_cover first");
  if (s.boundary <= 0) throw InvalidInput("neumann_cover needs nonempty boundary");
  if (D < 1) throw InvalidInput("degree must be positive");
  if (Integer(specs.size()) != s.boundary) throw InvalidInput("need one degree multiset per boundary component");
  Integer bp = 0;
  for (const auto& m : specs) {
    for (const auto& r : m)
      if (r.degree < 1 || r.count < 1) throw InvalidInput("boundary degrees must be positive");
    if (multiset_sum(m) != D) throw InvalidInput("boundary degree multiset does not sum to D");
    bp += multiset_size(m);
  }
  Integer dchi = D * s.euler();
  if ((bp - dchi) % 2 != 0) return std::nullopt;
  Integer g2 = 2 - bp - dchi;
  Surface out{g2 / 2, bp};
  if (out.genus < 0) throw InvariantFailure("negative genus from a feasible cover");
  return out;
}

std::vector<std::string> amalgam_cover_violations(const AmalgamCover& c) {
  std::vector<std::string> out;
  for (const auto& p : c.cover.problems()) out.push_back("cover: " + p);
  for (const auto& p : c.base.problems()) out.push_back("base: " + p);
  if (!out.empty()) return out;
  HalfCovering h{c.cover.graph(), c.base.graph(), c.vertex_map, c.edge_map};
  for (const auto& v : half_covering_violations(h)) out.push_back("graph map: " + v);
  if (!out.empty()) return out;
  const auto& S = h.source;
  const auto& T = h.target;
  if (static_cast<int>(c.degree.size()) != S.size()) return {"need one degree per cover vertex"};
  std::vector<Integer> sum(T.size(), 0);
  for (int v = 0; v < S.size(); ++v) sum[c.vertex_map[v]] += c.degree[v];
  for (int w = 0; w < T.size(); ++w)
    if (sum[w] != c.total)
      out.push_back("degrees over " + T.vertices[w].name + " sum to " + sum[w].str() + ", not " + c.total.str());
  const int n1 = static_cast<int>(c.cover.type1.size());
  const int m1 = static_cast<int>(c.base.type1.size());
  for (std::size_t j = 0; j < c.cover.type2.size(); ++j) {
    int v = n1 + static_cast<int>(j);
    int w = c.vertex_map[v];
    int bj = w - m1;
    CoverCertificate cert;
    cert.base = c.base.surface(bj);
    cert.cover = c.cover.surface(static_cast<int>(j));
    cert.degree = c.degree[v];
    auto base_star = T.star(w);
    auto cover_star = S.star(v);
    for (int f : base_star) {
      DegreeMultiset m;
      for (int e : cover_star)
        if (c.edge_map[e] == f) m.push_back({c.degree[S.edges[e].x], 1});
      cert.boundary_degrees.push_back(m);
    }
    for (const auto& p : surface_cover_violations(cert))
      out.push_back("surface " + c.cover.type2[j].id + " over " + c.base.type2[bj].id + ": " + p);
  }
  return out;
}

int max_search_vertices() {
  if (const char* s = std::getenv("RACGC_MAX_SEARCH")) {
    try {
      int v = std::stoi(s);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("RACGC_MAX_SEARCH must be a positive integer, got '") + s + "'");
  }
  return 12;
}

namespace {

// Restricted-growth enumeration of set partitions of {0..n-1}.
void partitions(int n, const std::function<bool(const std::vector<int>&, int)>& visit) {
  std::vector<int> a(n, 0);
  std::function<bool(int, int)> rec = [&](int i, int blocks) -> bool {
    if (i == n) return visit(a, blocks);
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      if (!rec(i + 1, std::max(blocks, b + 1))) return false;
    }
    return true;
  };
  if (n == 0) visit(a, 0);
  else rec(0, 0);
}

struct Quotient {
  BipartiteGraph target;
  HalfCovering map;
};

// Every surjective half-covering image of g (up to relabelling of blocks).
// When simple_only, multi-edges in the target are not allowed.
void quotients(const BipartiteGraph& g, bool simple_only, int bound,
               const std::function<bool(const Quotient&)>& visit) {
  auto t1 = g.of_type(1), t2 = g.of_type(2);
  const int n1 = static_cast<int>(t1.size()), n2 = static_cast<int>(t2.size());
  std::vector<int> local(g.size());
  for (int i = 0; i < n1; ++i) local[t1[i]] = i;
  for (int i = 0; i < n2; ++i) local[t2[i]] = i;
  std::vector<std::vector<int>> star(g.size());
  for (int v = 0; v < g.size(); ++v) star[v] = g.star(v);
  bool stop = false;
  partitions(n2, [&](const std::vector<int>& p2, int k2) {
    if (k2 + 1 > bound) return true;
    partitions(n1, [&](const std::vector<int>& p1, int k1) {
      if (k1 + k2 > bound) return true;
      // multiplicity of edges from each Type-1 vertex into each Type-2 block
      std::map<std::pair<int, int>, int> mult;  // (X block, Y block) -> m
      for (int i = 0; i < n1; ++i) {
        std::map<int, int> cnt;
        for (int e : star[t1[i]]) ++cnt[p2[local[g.edges[e].y]]];
        for (auto [Y, c] : cnt) {
          if (simple_only && c > 1) return true;
          auto key = std::make_pair(p1[i], Y);
          auto it = mult.find(key);
          if (it == mult.end()) mult[key] = c;
          else if (it->second != c) return true;
        }
      }
      // every Type-1 vertex of a block sees the same Type-2 blocks
      for (int i = 0; i < n1; ++i) {
        std::set<int> ys;
        for (int e : star[t1[i]]) ys.insert(p2[local[g.edges[e].y]]);
        for (const auto& [key, m] : mult)
          if (key.first == p1[i] && !ys.count(key.second)) return true;
      }
      // colour the edges of each block pair
      std::vector<int> colour(g.edges.size(), -1);
      for (const auto& [key, m] : mult) {
        std::vector<int> es;
        for (std::size_t e = 0; e < g.edges.size(); ++e)
          if (p1[local[g.edges[e].x]] == key.first && p2[local[g.edges[e].y]] == key.second)
            es.push_back(static_cast<int>(e));
        // Type-2 surjectivity needs each y in the Y block to reach every colour
        std::map<int, std::set<int>> seen_y;
        std::map<int, std::set<int>> seen_x;
        std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
          if (idx == es.size()) {
            for (int i = 0; i < n2; ++i)
              if (p2[i] == key.second && static_cast<int>(seen_y[t2[i]].size()) != m) return false;
            return true;
          }
          int e = es[idx];
          int x = g.edges[e].x, y = g.edges[e].y;
          for (int c = 0; c < m; ++c) {
            if (seen_x[x].count(c)) continue;
            bool fresh_y = !seen_y[y].count(c);
            colour[e] = c;
            seen_x[x].insert(c);
            if (fresh_y) seen_y[y].insert(c);
            if (rec(idx + 1)) return true;
            seen_x[x].erase(c);
            if (fresh_y) seen_y[y].erase(c);
          }
          colour[e] = -1;
          return false;
        };
        if (m == 1) {
          for (int e : es) colour[e] = 0;
          for (int i = 0; i < n2; ++i)
            if (p2[i] == key.second) {
              bool any = false;
              for (int e : star[t2[i]])
                if (p1[local[g.edges[e].x]] == key.first) any = true;
              if (!any) return true;
            }
        } else if (!rec(0)) {
          return true;
        }
      }
      Quotient q;
      std::vector<int> X(k1), Y(k2);
      for (int b = 0; b < k1; ++b) {
        std::string name;
        for (int i = 0; i < n1; ++i)
          if (p1[i] == b) name += (name.empty() ? "" : "+") + g.vertices[t1[i]].name;
        X[b] = q.target.add_vertex(name, 1);
      }
      for (int b = 0; b < k2; ++b) {
        std::string name;
        for (int i = 0; i < n2; ++i)
          if (p2[i] == b) name += (name.empty() ? "" : "+") + g.vertices[t2[i]].name;
        Y[b] = q.target.add_vertex(name, 2);
      }
      std::map<std::tuple<int, int, int>, int> tedge;
      for (const auto& [key, m] : mult)
        for (int c = 0; c < m; ++c) tedge[{key.first, key.second, c}] = q.target.add_edge(X[key.first], Y[key.second]);
      q.map.source = g;
      q.map.target = q.target;
      q.map.vertex_map.resize(g.size());
      for (int i = 0; i < n1; ++i) q.map.vertex_map[t1[i]] = X[p1[i]];
      for (int i = 0; i < n2; ++i) q.map.vertex_map[t2[i]] = Y[p2[i]];
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        q.map.edge_map.push_back(
            tedge.at({p1[local[g.edges[e].x]], p2[local[g.edges[e].y]], colour[e]}));
      if (!visit(q)) {
        stop = true;
        return false;
      }
      return true;
    });
    return !stop;
  });
}

void check_bound(const BipartiteGraph& g, int bound) {
  if (!g.connected()) throw InvalidInput("half-cover search needs a connected graph");
  if (g.size() > bound)
    throw Unsupported("graph has " + std::to_string(g.size()) + " vertices; search bound is " + std::to_string(bound) +
                      " (RACGC_MAX_SEARCH)");
}

}  // namespace

std::vector<TargetWitness> tree_half_cover_targets(const BipartiteGraph& lambda, int bound) {
  if (bound < 0) bound = max_search_vertices();
  check_bound(lambda, bound);
  std::vector<TargetWitness> out;
  quotients(lambda, true, lambda.size(), [&](const Quotient& q) {
    if (!q.target.is_tree()) return true;
    for (const auto& w : out)
      if (find_isomorphism(w.target, q.target)) return true;
    out.push_back({q.target, q.map});
    return true;
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const TargetWitness& a, const TargetWitness& b) { return a.target.size() < b.target.size(); });
  return out;
}

static HalfCovering compose(const HalfCovering& h, const BipartiteGraph& final_target, const std::vector<int>& iso) {
  HalfCovering out;
  out.source = h.source;
  out.target = final_target;
  for (int v : h.vertex_map) out.vertex_map.push_back(iso[v]);
  // match parallel edges of the intermediate target to those of the final one
  std::vector<int> edge_iso(h.target.edges.size(), -1);
  std::vector<char> used(final_target.edges.size(), 0);
  for (std::size_t e = 0; e < h.target.edges.size(); ++e) {
    int x = iso[h.target.edges[e].x], y = iso[h.target.edges[e].y];
    for (std::size_t f = 0; f < final_target.edges.size(); ++f)
      if (!used[f] && final_target.edges[f].x == x && final_target.edges[f].y == y) {
        used[f] = 1;
        edge_iso[e] = static_cast<int>(f);
        break;
      }
  }
  for (int e : h.edge_map) out.edge_map.push_back(edge_iso[e]);
  return out;
}

std::optional<CommonTarget> common_half_cover_target(const BipartiteGraph& a, const BipartiteGraph& b, int bound) {
  if (bound < 0) bound = max_search_vertices();
  check_bound(a, bound);
  check_bound(b, bound);
  const int limit = std::min(a.size(), b.size());
  auto collect = [&](const BipartiteGraph& g) {
    std::vector<Quotient> qs;
    quotients(g, false, limit, [&](const Quotient& q) {
      for (const auto& w : qs)
        if (find_isomorphism(w.target, q.target)) return true;
      qs.push_back(q);
      return true;
    });
    std::stable_sort(qs.begin(), qs.end(),
                     [](const Quotient& x, const Quotient& y) { return x.target.size() < y.target.size(); });
    return qs;
  };
  auto qa = collect(a), qb = collect(b);
  for (const auto& x : qa)
    for (const auto& y : qb)
      if (auto iso = find_isomorphism(y.target, x.target)) {
        CommonTarget c{x.target, x.map, compose(y.map, x.target, *iso)};
        if (!verify_half_covering(c.from_first) || !verify_half_covering(c.from_second))
          throw InvariantFailure("common target witness failed verification");
        return c;
      }
  return std::nullopt;
}

json half_covering_to_json(const HalfCovering& h) {
  json vm = json::object(), em = json::array();
  for (int v = 0; v < h.source.size(); ++v) vm[h.source.vertices[v].name] = h.target.vertices[h.vertex_map[v]].name;
  for (int f : h.edge_map) em.push_back(f);
  return {{"source", bipartite_to_json(h.source)},
          {"target", bipartite_to_json(h.target)},
          {"vertex_map", vm},
          {"edge_map", em}};
}

static json multiset_json(const DegreeMultiset& m) {
  json out = json::array();
  for (const auto& r : m) out.push_back({{"degree", integer_json(r.degree)}, {"count", integer_json(r.count)}});
  return out;
}

json cover_certificate_to_json(const CoverCertificate& c) {
  json bd = json::array();
  for (const auto& m : c.boundary_degrees) bd.push_back(multiset_json(m));
  return {{"base", {{"genus", integer_json(c.base.genus)}, {"boundary", integer_json(c.base.boundary)}}},
          {"cover", {{"genus", integer_json(c.cover.genus)}, {"boundary", integer_json(c.cover.boundary)}}},
          {"degree", integer_json(c.degree)},
          {"boundary_degrees", bd}};
}

json amalgam_cover_to_json(const AmalgamCover& c) {
  auto S = c.cover.graph();
  auto T = c.base.graph();
  json vm = json::object(), deg = json::object();
  for (int v = 0; v < S.size(); ++v) {
    vm[S.vertices[v].name] = T.vertices[c.vertex_map[v]].name;
    deg[S.vertices[v].name] = integer_json(c.degree[v]);
  }
  return {{"cover", amalgam_to_json(c.cover)},
          {"base", amalgam_to_json(c.base)},
          {"vertex_map", vm},
          {"edge_map", c.edge_map},
          {"degrees", deg},
          {"total_degree", integer_json(c.total)}};
}

}  // namespace racgc
