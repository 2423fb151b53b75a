#pragma once

#include "racgc/amalgam.hpp"
#include "racgc/classify.hpp"
#include "racgc/orbicomplex.hpp"
#include "racgc/racg.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace racgc {

// K𝒪 and K'𝒪' compared as multisets of polygon side counts around a
// branching edge of length K (resp. K').
struct ThetaWitness {
  GeneralizedTheta left, right;
  Integer K, K_prime;
  std::vector<Integer> sides, sides_prime;  // sorted
  std::vector<std::string> problems() const;
};

ThetaWitness witness_theta(const GeneralizedTheta& t, const GeneralizedTheta& t2);

// Surface amalgam 𝒳 over H(Λ) built from cycle data alone:
// circles x<i>+ / x<i>-, central surface y0, branch surfaces y<i>_<j>.
SurfaceAmalgam synthesize_X(const CycleData& c);

struct Cond1Class {
  ZVector w;  // minimal integral element w_p
  int r = 0;
  std::vector<int> q, q_prime;            // vector indices in the class
  std::vector<Rational> R, R_prime;       // v_pq = R_pq w_p
  std::vector<Integer> k, k_prime;        // 16|R|
  std::vector<Integer> d, d_prime;        // K / k
  Integer B;
};

struct Cond1Witness {
  CycleData data, data_prime;
  std::vector<Cond1Class> classes;
  Integer B, K, D, D_prime;
  SurfaceAmalgam X, X_prime, Y, Y_prime;
  AmalgamCover cover, cover_prime;  // Y → X, Y' → X'
  std::vector<int> psi_iso;         // Y.graph() → Y'.graph()
  Surface T;
  std::vector<std::vector<Surface>> T_pj;  // [class][j]
  std::vector<std::string> problems() const;
};

Cond1Witness witness_cycle_cond1(const CycleData& c, const CycleData& c2);

struct Cond2Side {
  CycleData data;
  SurfaceAmalgam X, Z;
  ZVector u;
  Integer K, M, D;
  std::vector<Integer> d;
  int k = 0;  // 0-based position of 16χ(W_A) in w̃
  AmalgamCover z_to_x, z_to_w;
};

struct Cond2Witness {
  ZVector w0;
  SurfaceAmalgam W;
  Cond2Side left, right;
  std::vector<std::string> problems() const;
};

Cond2Witness witness_cycle_cond2(const CycleData& c, const CycleData& c2);

struct TreeVertexData {
  std::string id;
  bool terminal = false;
  Integer b, g, g_prime, h;
  Integer polygon_sides;        // terminal: g'/2 + 4
  Surface s1, s2;               // non-terminal split of S_{y'}
  Integer q_sides, p_sides;     // non-terminal: 2(b+1) and h/2 + 4
};

struct RacgConversion {
  SurfaceAmalgam input, positive, lifted;
  bool pos_genus_applied = false;
  AmalgamCover pos_genus;  // positive → input (degree 3) when applied
  AmalgamCover lift;       // lifted → positive (degree 8)
  std::vector<TreeVertexData> vertices;
  Graph gamma;
  Cover16 cover;
  std::vector<int> jsj_iso;  // positive.graph() → jsj(Γ) bipartite graph
  Rational chi_input, chi_positive, chi_lifted, chi_orbicomplex;
  std::vector<std::string> problems() const;
};

RacgConversion tree_to_racg(const SurfaceAmalgam& x);

// Combinatorial cover of `base` by `cover` where every cover vertex is named
// by its image; edges are matched by (image surface, image circle).
AmalgamCover make_amalgam_cover(const SurfaceAmalgam& cover, const SurfaceAmalgam& base,
                                const std::map<std::string, std::string>& image,
                                const std::map<std::string, Integer>& degree, const Integer& total);

// Certificate bundle for a positive decision on two graphs; throws if a
// witness fails to re-validate.
nlohmann::json witness_for_graphs(const Graph& g, const Graph& g2, const Decision& d);
nlohmann::json witness_for_cycle_data(const CycleData& c, const CycleData& c2, const Decision& d);

nlohmann::json theta_witness_to_json(const ThetaWitness& w);
nlohmann::json cond1_witness_to_json(const Cond1Witness& w);
nlohmann::json cond2_witness_to_json(const Cond2Witness& w);
nlohmann::json racg_conversion_to_json(const RacgConversion& r);

}  // namespace racgc
