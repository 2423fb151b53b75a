#include "racgc/orbicomplex.hpp"

#include "racgc/errors.hpp"
#include "racgc/racg.hpp"

#include <algorithm>
#include <map>

namespace racgc {

using nlohmann::json;

int Polygon::reflection_sides() const {
  return static_cast<int>(std::count_if(sides.begin(), sides.end(), [](const OrbiSide& s) { return s.reflection; }));
}

int Polygon::non_reflection_sides() const { return static_cast<int>(sides.size()) - reflection_sides(); }

int Polygon::v4_corners() const {
  int c = 0;
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (sides[i].reflection && sides[(i + 1) % sides.size()].reflection) ++c;
  return c;
}

int Polygon::v2_corners() const { return static_cast<int>(sides.size()) - v4_corners(); }

Rational Polygon::euler() const {
  return Rational(1) - non_reflection_sides() - Rational(reflection_sides(), 2) + Rational(v2_corners(), 2) +
         Rational(v4_corners(), 4);
}

Rational Orbicomplex::euler() const {
  return Rational(F) - (Rational(E1) + Rational(E2, 2)) + (Rational(V2, 2) + Rational(V4, 4));
}

namespace {

OrbiSide refl(const Graph& g, VertexId v) { return {true, g.name(v), {}}; }

OrbiSide nonrefl(const Graph& g, VertexId a, VertexId b) {
  auto x = g.name(a), y = g.name(b);
  if (y < x) std::swap(x, y);
  return {false, {}, {x, y}};
}

// P_β for the path path[0], ..., path.back().
Polygon branch_polygon(const Graph& g, const std::vector<VertexId>& path, std::string id) {
  Polygon p{std::move(id), {}};
  for (auto v : path) p.sides.push_back(refl(g, v));
  p.sides.push_back(nonrefl(g, path.front(), path.back()));
  return p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantFailure("orbicomplex: " + what);
}

}  // namespace

Orbicomplex build_orbicomplex(const Graph& g) {
  if (!validate(g).in_G_3convex) throw InvalidInput("orbicomplex construction needs a 3-convex graph in the class G");
  return build_orbicomplex(g, jsj_decomposition(g));
}

Orbicomplex build_orbicomplex(const Graph& g, const JsjGraph& jsj) {
  Orbicomplex o;
  o.jsj = jsj;
  std::map<std::vector<VertexId>, Branch> branch_sets;
  for (const auto& b : branches(g)) {
    std::vector<VertexId> s{b.u, b.v};
    s.insert(s.end(), b.interior.begin(), b.interior.end());
    std::sort(s.begin(), s.end());
    branch_sets.emplace(s, b);
  }
  for (std::size_t t = 0; t < jsj.type2.size(); ++t) {
    const auto& A = jsj.type2[t];
    OrbiPiece piece;
    piece.type2 = static_cast<int>(t);
    const std::string id = "y" + std::to_string(t);
    if (auto it = branch_sets.find(A); it != branch_sets.end()) {
      piece.branch = true;
      piece.L = 2;
      std::vector<VertexId> path{it->second.u};
      path.insert(path.end(), it->second.interior.begin(), it->second.interior.end());
      path.push_back(it->second.v);
      piece.polygon = branch_polygon(g, path, id);
    } else {
      const auto& order = jsj.cyclic_orders.at(t);
      const int n = static_cast<int>(order.size());
      std::vector<int> ess;
      for (int i = 0; i < n; ++i)
        if (g.essential(order[i])) ess.push_back(i);
      const int L = static_cast<int>(ess.size());
      piece.L = L;
      piece.q_polygon.id = id + ":Q";
      piece.polygon.id = id;
      for (int e = 0; e < L; ++e) {
        int i = ess[e], j = ess[(e + 1) % L];
        VertexId p = order[i], q = order[j];
        piece.q_polygon.sides.push_back(refl(g, p));
        piece.q_polygon.sides.push_back(nonrefl(g, p, q));
        piece.polygon.sides.push_back(refl(g, p));
        int gap = ((j - i) % n + n) % n;
        if (gap == 1) {
          piece.polygon.sides.push_back(nonrefl(g, p, q));
        } else {
          std::vector<VertexId> arc;
          for (int s = 0; s <= gap; ++s) arc.push_back(order[(i + s) % n]);
          for (int s = 1; s < gap; ++s) piece.polygon.sides.push_back(refl(g, arc[s]));
          piece.attached.push_back(branch_polygon(g, arc, id + ":P" + std::to_string(piece.attached.size())));
        }
      }
      require(piece.q_polygon.euler() == Rational(2 - L, 2), "Q_A has the wrong euler characteristic");
      Rational glued = piece.q_polygon.euler();
      for (const auto& pb : piece.attached) glued += pb.euler();
      require(glued == piece.polygon.euler(), "gluing P_β into Q_A changed the euler characteristic");
      require(piece.polygon.reflection_sides() == static_cast<int>(A.size()), "𝒜 needs |A| reflection sides");
      require(piece.polygon.non_reflection_sides() == jsj.valence2(static_cast<int>(t)),
              "𝒜 needs one non-reflection side per incident Type-1 vertex");
    }
    require(piece.polygon.euler() == euler_characteristic(induced_subgraph(g, A)),
            "vertex space " + id + " does not match χ(W_A)");
    o.pieces.push_back(std::move(piece));
  }
  // each branching edge appears once per incident Type-2 vertex
  std::map<std::pair<std::string, std::string>, int> seen;
  for (const auto& pc : o.pieces)
    for (const auto& s : pc.polygon.sides)
      if (!s.reflection) ++seen[s.pair];
  require(seen.size() == jsj.type1.size(), "non-reflection edge types do not match the Type-1 vertices");
  for (std::size_t i = 0; i < jsj.type1.size(); ++i) {
    auto x = g.name(jsj.type1[i].first), y = g.name(jsj.type1[i].second);
    if (y < x) std::swap(x, y);
    require(seen[{x, y}] == jsj.valence1(static_cast<int>(i)) && seen[{x, y}] >= 3,
            "branching edge {" + x + "," + y + "} meets fewer than three polygons");
  }
  o.F = static_cast<long long>(o.pieces.size());
  o.E1 = static_cast<long long>(jsj.type1.size());
  o.V2 = 2 * o.E1;
  for (const auto& pc : o.pieces) {
    o.E2 += pc.polygon.reflection_sides();
    o.V4 += pc.polygon.v4_corners();
  }
  require(o.euler() == euler_characteristic(g), "χ(𝒪) differs from χ(W_Γ)");
  return o;
}

Cover16 cover16(const Graph& g) {
  Cover16 c;
  c.orbicomplex = build_orbicomplex(g);
  const auto& jsj = c.orbicomplex.jsj;
  const auto lambda = jsj.to_bipartite();
  c.jsj_map = build_H(lambda);
  const auto& H = c.jsj_map.source;
  for (int v = 0; v < H.size(); ++v)
    if (H.type(v) == 1) c.amalgam.type1.push_back(H.vertices[v].name);
  for (const auto& op : c.orbicomplex.pieces) {
    Cover16Piece p;
    p.type2 = op.type2;
    p.branch = op.branch;
    p.orbifold_euler = op.polygon.euler();
    auto branch_surface = [](int sides) {
      if (sides < 5) throw InvariantFailure("branch polygon with fewer than five sides");
      return Surface{2 * (sides - 4), 2};
    };
    if (op.branch) {
      p.p = static_cast<int>(op.polygon.sides.size());
      p.surface = branch_surface(p.p);
    } else {
      p.L = op.L;
      p.ell = op.polygon.non_reflection_sides();
      Surface core{3 * op.L - 7, 2 * op.L};
      p.parts.push_back(core);
      Integer genus = core.genus;
      for (const auto& pb : op.attached) {
        auto s = branch_surface(static_cast<int>(pb.sides.size()));
        p.parts.push_back(s);
        genus += s.genus + 1;
      }
      p.surface = Surface{genus, 2 * p.ell};
    }
    SurfaceAmalgam::Piece sp;
    sp.id = "y" + std::to_string(op.type2);
    sp.genus = p.surface.genus;
    int y = H.find(sp.id);
    for (std::size_t e = 0; e < H.edges.size(); ++e)
      if (H.edges[e].y == y) sp.boundary.push_back(H.vertices[H.edges[e].x].name);
    c.amalgam.type2.push_back(sp);
    c.pieces.push_back(p);
  }
  c.euler = amalgam_euler(c.amalgam);
  auto bad = c.problems();
  if (!bad.empty()) throw InvariantFailure("cover16: " + bad.front());
  return c;
}

std::vector<std::string> Cover16::problems() const {
  std::vector<std::string> out;
  for (const auto& p : amalgam.problems()) out.push_back("amalgam: " + p);
  if (!out.empty()) return out;
  if (euler != amalgam_euler(amalgam)) out.push_back("recorded χ(𝒳) is stale");
  if (euler != 16 * orbicomplex.euler()) out.push_back("χ(𝒳) ≠ 16·χ(𝒪)");
  for (const auto& p : pieces) {
    if (p.surface.genus < 2) out.push_back("surface of genus < 2");
    if (Rational(p.surface.euler()) != 16 * p.orbifold_euler) out.push_back("surface χ is not 16 times its orbifold");
    if (p.branch) {
      if (p.surface != Surface{2 * (p.p - 4), 2}) out.push_back("branch surface is not S_{2(p−4),2}");
    } else {
      if (p.parts.empty() || p.parts.front() != Surface{3 * p.L - 7, 2 * p.L})
        out.push_back("essential surface is not S_{3L−7,2L}");
      if (p.surface.boundary != 2 * p.ell) out.push_back("non-branch surface needs 2ℓ boundary components");
    }
  }
  // graph of the amalgam is H(Λ), matched by vertex name
  auto G = amalgam.graph();
  const auto& H = jsj_map.source;
  std::vector<int> map(G.size(), -1);
  for (int v = 0; v < G.size(); ++v) map[v] = H.find(G.vertices[v].name);
  if (!is_isomorphism(G, H, map)) out.push_back("amalgam graph differs from H(Λ)");
  if (!verify_half_covering(jsj_map)) out.push_back("H(Λ) → Λ is not a half-covering");
  return out;
}

static json polygon_json(const Polygon& p) {
  json sides = json::array();
  for (const auto& s : p.sides)
    sides.push_back(s.reflection ? json{{"reflection", s.generator}}
                                 : json{{"branching", {s.pair.first, s.pair.second}}});
  return {{"id", p.id}, {"sides", sides}, {"euler", to_string(p.euler())}};
}

json orbicomplex_to_json(const Graph& g, const Orbicomplex& o) {
  json pieces = json::array();
  for (const auto& p : o.pieces) {
    json j{{"type2", "y" + std::to_string(p.type2)},
           {"kind", p.branch ? "branch" : "non-branch"},
           {"polygon", polygon_json(p.polygon)}};
    if (!p.branch) {
      j["L"] = p.L;
      j["Q"] = polygon_json(p.q_polygon);
      json att = json::array();
      for (const auto& a : p.attached) att.push_back(polygon_json(a));
      j["attached"] = att;
    }
    pieces.push_back(j);
  }
  return {{"pieces", pieces},
          {"counts", {{"F", o.F}, {"E1", o.E1}, {"E2", o.E2}, {"V2", o.V2}, {"V4", o.V4}}},
          {"euler", to_string(o.euler())},
          {"jsj", jsj_to_json(g, o.jsj)}};
}

static json surface_json(const Surface& s) {
  return {{"genus", integer_json(s.genus)}, {"boundary", integer_json(s.boundary)}};
}

json cover16_to_json(const Graph& g, const Cover16& c) {
  json pieces = json::array();
  for (const auto& p : c.pieces) {
    json j{{"type2", "y" + std::to_string(p.type2)},
           {"kind", p.branch ? "branch" : "non-branch"},
           {"surface", surface_json(p.surface)},
           {"orbifold_euler", to_string(p.orbifold_euler)}};
    if (p.branch) {
      j["p"] = p.p;
    } else {
      j["L"] = p.L;
      j["ell"] = p.ell;
      json parts = json::array();
      for (const auto& s : p.parts) parts.push_back(surface_json(s));
      j["parts"] = parts;
    }
    pieces.push_back(j);
  }
  return {{"degree", integer_json(c.degree)},
          {"euler", to_string(c.euler)},
          {"group_euler", to_string(euler_characteristic(g))},
          {"boundary_degrees_per_branching_edge", {8, 8}},
          {"amalgam", amalgam_to_json(c.amalgam)},
          {"pieces", pieces},
          {"orbicomplex", orbicomplex_to_json(g, c.orbicomplex)}};
}

}  // namespace racgc
