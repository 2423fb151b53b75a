#pragma once

#include "racgc/amalgam.hpp"
#include "racgc/graph.hpp"
#include "racgc/racg.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace racgc {

struct ClassDetail {
  ZVector rep;
  std::vector<int> left, right;  // vector indices on each side
  Rational lhs, rhs;             // χ(W_{A'})·Σ χ(W_{Θ_i})  and  χ(W_A)·Σ χ(W_{Θ'_k})
};

struct Condition1 {
  bool holds = false;
  bool part_a = false;
  std::vector<ClassDetail> classes;
};

struct Condition2 {
  bool holds = false;
  bool common_r = false;
  std::optional<int> r;
  bool single_class_left = false, single_class_right = false;
  std::optional<QVector> w, w_prime;
  bool w_commensurable = false;
  std::optional<ZVector> w0;
};

Condition1 condition1(const CycleData& c, const CycleData& c2);
Condition2 condition2(const CycleData& c, const CycleData& c2);

// A supported defining graph after any doubling needed to make it 3-convex.
struct Normalized {
  std::variant<GeneralizedTheta, ThetaCycle> shape;
  std::vector<std::string> reductions;
  int index = 1;  // index of the finite-index subgroup reached by doubling
  bool is_theta() const { return std::holds_alternative<GeneralizedTheta>(shape); }
  const GeneralizedTheta& theta() const { return std::get<GeneralizedTheta>(shape); }
  const ThetaCycle& cycle() const { return std::get<ThetaCycle>(shape); }
};

// Throws Unsupported for graphs outside the two families.
Normalized normalize(const Graph& g);

struct Decision {
  bool commensurable = false;
  std::string route;  // GenTheta, Cycle-cond1, Cycle-cond2, Cycle-both, Cycle-neither, doubling-reduction, amalgam-tree
  std::vector<std::string> reductions;
  nlohmann::json evidence;
};

Decision classify_theta(const GeneralizedTheta& t, const GeneralizedTheta& t2);
Decision classify_cycle_data(const CycleData& c, const CycleData& c2);
Decision classify_cycle(const ThetaCycle& c, const ThetaCycle& c2);
// Either argument may be the Θ-graph; it is the one sent through theta_to_cycle.
Decision classify_cross(const GeneralizedTheta& t, const ThetaCycle& c);
Decision classify_normalized(const Normalized& a, const Normalized& b);
Decision classify_graphs(const Graph& g, const Graph& g2);
Decision classify_amalgam(const SurfaceAmalgam& x, const SurfaceAmalgam& x2);

nlohmann::json decision_to_json(const Decision& d);
nlohmann::json condition1_to_json(const Condition1& c);
nlohmann::json condition2_to_json(const Condition2& c);
nlohmann::json cycle_data_to_json(const CycleData& c);
nlohmann::json qvector_json(const QVector& v);
nlohmann::json zvector_json(const ZVector& v);

}  // namespace racgc
