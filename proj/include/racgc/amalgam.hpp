#pragma once

#include "racgc/bipartite.hpp"
#include "racgc/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace racgc {

struct Surface {
  Integer genus = 0;
  Integer boundary = 0;
  Integer euler() const { return 2 - 2 * genus - boundary; }
  std::string str() const;  // "S_{g,b}"
  friend bool operator==(const Surface&, const Surface&) = default;
};

// Surfaces glued along circles. Type-2 piece j has one boundary component per
// entry of `boundary`, each naming the Type-1 circle it is glued to.
struct SurfaceAmalgam {
  struct Piece {
    std::string id;
    Integer genus = 0;
    std::vector<std::string> boundary;
  };
  std::vector<std::string> type1;
  std::vector<Piece> type2;

  Surface surface(int j) const;
  // Type-1 vertices first (in order), then Type-2; one edge per boundary entry,
  // ordered by piece then boundary slot.
  BipartiteGraph graph() const;
  std::vector<std::string> problems() const;  // empty iff valid
  void validate() const;                      // throws InvalidInput
};

Rational amalgam_euler(const SurfaceAmalgam& x);
nlohmann::json amalgam_to_json(const SurfaceAmalgam& x);
SurfaceAmalgam amalgam_from_json(const nlohmann::json& j);
SurfaceAmalgam load_amalgam(const std::string& path_or_json);

// Same graph up to type-preserving isomorphism with equal (g, b) at matched
// Type-2 vertices.
std::optional<std::vector<int>> amalgam_homeomorphism(const SurfaceAmalgam& a, const SurfaceAmalgam& b);

struct HalfCovering {
  BipartiteGraph source, target;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

std::vector<std::string> half_covering_violations(const HalfCovering& h);
inline bool verify_half_covering(const HalfCovering& h) { return half_covering_violations(h).empty(); }

// H(t) with its canonical map to t. Type-1 vertex u of t becomes u' and u''.
HalfCovering build_H(const BipartiteGraph& t);

struct DegreeRun {
  Integer degree;
  Integer count = 1;
};
using DegreeMultiset = std::vector<DegreeRun>;
DegreeMultiset degrees(const std::vector<long long>& ds);
Integer multiset_sum(const DegreeMultiset& m);
Integer multiset_size(const DegreeMultiset& m);

struct CoverCertificate {
  Surface base, cover;
  Integer degree = 1;
  std::vector<DegreeMultiset> boundary_degrees;  // one per boundary of base
};

std::vector<std::string> surface_cover_violations(const CoverCertificate& c);

CoverCertificate pos_genus_cover(const Surface& s);

// Lemma-of-Neumann feasibility; nullopt when the parity condition fails.
std::optional<Surface> neumann_cover(const Surface& s, const Integer& D, const std::vector<DegreeMultiset>& specs);

// Finite cover of one surface amalgam by another, described combinatorially.
struct AmalgamCover {
  SurfaceAmalgam cover, base;
  std::vector<int> vertex_map;  // on cover.graph() vertices
  std::vector<int> edge_map;    // on cover.graph() edges
  std::vector<Integer> degree;  // per cover vertex: circle degree or surface degree
  Integer total = 1;
};

std::vector<std::string> amalgam_cover_violations(const AmalgamCover& c);

int max_search_vertices();  // RACGC_MAX_SEARCH, default 12

struct TargetWitness {
  BipartiteGraph target;
  HalfCovering map;
};

std::vector<TargetWitness> tree_half_cover_targets(const BipartiteGraph& lambda, int bound = -1);

struct CommonTarget {
  BipartiteGraph target;
  HalfCovering from_first, from_second;
};

std::optional<CommonTarget> common_half_cover_target(const BipartiteGraph& a, const BipartiteGraph& b, int bound = -1);

nlohmann::json half_covering_to_json(const HalfCovering& h);
nlohmann::json cover_certificate_to_json(const CoverCertificate& c);
nlohmann::json amalgam_cover_to_json(const AmalgamCover& c);
nlohmann::json integer_json(const Integer& n);

}  // namespace racgc
