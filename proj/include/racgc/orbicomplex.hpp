#pragma once

#include "racgc/amalgam.hpp"
#include "racgc/graph.hpp"
#include "racgc/jsj.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace racgc {

struct OrbiSide {
  bool reflection = true;
  std::string generator;              // reflection sides
  std::pair<std::string, std::string> pair;  // non-reflection sides: type {a,b}
};

struct Polygon {
  std::string id;
  std::vector<OrbiSide> sides;  // cyclic
  int reflection_sides() const;
  int non_reflection_sides() const;
  int v4_corners() const;  // corners between two reflection sides
  int v2_corners() const;  // corners touching a non-reflection side
  Rational euler() const;  // as a standalone orbifold
};

// One vertex space of the orbicomplex, attached to a Type-2 vertex of the JSJ graph.
struct OrbiPiece {
  int type2 = -1;
  bool branch = false;
  Polygon polygon;  // P_β, or the glued polygon 𝒜 = Q_A ∪ attached P_β
  // non-branch pieces only
  int L = 0;
  Polygon q_polygon;                // Q_A, a 2L-gon
  std::vector<Polygon> attached;    // P_β glued into Q_A along arcs of A
};

struct Orbicomplex {
  JsjGraph jsj;
  std::vector<OrbiPiece> pieces;
  long long F = 0, E1 = 0, E2 = 0, V2 = 0, V4 = 0;
  Rational euler() const;  // F − (E1 + E2/2) + (V2/2 + V4/4)
};

// Requires validate(g).in_G_3convex; asserts χ(𝒪) = χ(W_Γ).
Orbicomplex build_orbicomplex(const Graph& g);
Orbicomplex build_orbicomplex(const Graph& g, const JsjGraph& jsj);

struct Cover16Piece {
  int type2 = -1;
  bool branch = false;
  int p = 0;                 // branch: polygon sides
  int L = 0;                 // non-branch: essential vertices
  int ell = 0;               // non-branch: branching edges
  Surface surface;
  std::vector<Surface> parts;  // non-branch: S_{3L−7,2L} then the glued S_β
  Rational orbifold_euler;
};

struct Cover16 {
  Orbicomplex orbicomplex;
  HalfCovering jsj_map;  // H(Λ) → Λ
  SurfaceAmalgam amalgam;  // over H(Λ)
  std::vector<Cover16Piece> pieces;
  Integer degree = 16;
  Rational euler;  // χ(𝒳)
  std::vector<std::string> problems() const;  // re-checks every stated identity
};

Cover16 cover16(const Graph& g);

nlohmann::json orbicomplex_to_json(const Graph& g, const Orbicomplex& o);
nlohmann::json cover16_to_json(const Graph& g, const Cover16& c);

}  // namespace racgc
