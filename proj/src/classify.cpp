#include "racgc/classify.hpp"

#include "racgc/errors.hpp"
#include "racgc/witness.hpp"

#include <algorithm>

namespace racgc {

using nlohmann::json;

json qvector_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json zvector_json(const ZVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Condition1 condition1(const CycleData& c, const CycleData& c2) {
  Condition1 out;
  auto m = class_multiset_match(c.vectors, c2.vectors);
  out.part_a = m.match;
  bool b = true;
  for (const auto& g : m.classes) {
    ClassDetail d{g.rep, g.left, g.right, 0, 0};
    Rational s = 0, s2 = 0;
    for (int i : g.left) s += entry_sum(c.vectors[i]);
    for (int k : g.right) s2 += entry_sum(c2.vectors[k]);
    d.lhs = c2.chi_a * s;
    d.rhs = c.chi_a * s2;
    if (d.lhs != d.rhs) b = false;
    out.classes.push_back(std::move(d));
  }
  out.holds = out.part_a && b;
  return out;
}

Condition2 condition2(const CycleData& c, const CycleData& c2) {
  Condition2 out;
  out.w = c.w;
  out.w_prime = c2.w;
  out.common_r = c.r && c2.r && *c.r == *c2.r && *c.r >= 2;
  if (out.common_r) out.r = c.r;
  auto single = [](const CycleData& d) {
    if (d.vectors.empty()) return false;
    for (const auto& v : d.vectors)
      if (!commensurable(v, d.vectors.front())) return false;
    return true;
  };
  out.single_class_left = single(c);
  out.single_class_right = single(c2);
  if (c.w && c2.w) {
    out.w_commensurable = commensurable(*c.w, *c2.w);
    if (out.w_commensurable) out.w0 = minimal_integral(*c.w).rep;
  }
  out.holds = out.common_r && out.single_class_left && out.single_class_right && out.w_commensurable;
  return out;
}

Normalized normalize(const Graph& g) {
  auto report = validate(g);
  if (!report.in_G) {
    for (const auto& ch : report.checks)
      if (!ch.passed) throw Unsupported("graph is not in the class G: check '" + ch.name + "' fails");
    throw Unsupported("graph is not in the class G");
  }
  Normalized n;
  if (auto t = recognize_gen_theta(g)) {
    GeneralizedTheta th = *t;
    if (!th.n.empty() && th.n.front() == 1) {
      auto d = double_theta(th);
      n.reductions.push_back("double_theta: " + th.shorthand() + " -> " + d.shorthand() + " (index 2)");
      n.index = 2;
      th = d;
    }
    if (!th.three_convex() || th.k() < 3)
      throw Unsupported(th.shorthand() + " is not a 3-convex theta-graph with at least 3 branches after doubling");
    n.shape = th;
    return n;
  }
  if (auto c = recognize_theta_cycle(g)) {
    if (!c->three_convex())
      throw Unsupported("cycle of theta-graphs " + c->shorthand() +
                        " is not 3-convex; no doubling reduction is implemented for cycles");
    n.shape = *c;
    return n;
  }
  throw Unsupported("graph is neither a generalized theta-graph nor a cycle of generalized theta-graphs");
}

Decision classify_theta(const GeneralizedTheta& t, const GeneralizedTheta& t2) {
  auto v = theta_vector(t), v2 = theta_vector(t2);
  if (t.k() < 3 || t2.k() < 3) throw Unsupported("theta classification needs at least 3 branches");
  Decision d;
  d.route = "GenTheta";
  d.commensurable = commensurable(v, v2);
  d.evidence = {{"left", t.shorthand()}, {"right", t2.shorthand()}, {"v", qvector_json(v)}, {"v_prime", qvector_json(v2)}};
  if (d.commensurable) {
    d.evidence["class"] = zvector_json(minimal_integral(v).rep);
  }
  return d;
}

Decision classify_cycle_data(const CycleData& c, const CycleData& c2) {
  auto one = condition1(c, c2);
  auto two = condition2(c, c2);
  Decision d;
  d.commensurable = one.holds || two.holds;
  d.route = one.holds && two.holds ? "Cycle-both" : one.holds ? "Cycle-cond1" : two.holds ? "Cycle-cond2" : "Cycle-neither";
  d.evidence = {{"data", cycle_data_to_json(c)},
                {"data_prime", cycle_data_to_json(c2)},
                {"condition1", condition1_to_json(one)},
                {"condition2", condition2_to_json(two)}};
  return d;
}

Decision classify_cycle(const ThetaCycle& c, const ThetaCycle& c2) {
  auto d = classify_cycle_data(cycle_data(c), cycle_data(c2));
  d.evidence["left"] = c.shorthand();
  d.evidence["right"] = c2.shorthand();
  return d;
}

Decision classify_cross(const GeneralizedTheta& t, const ThetaCycle& c) {
  auto tc = theta_to_cycle(t);
  auto inner = classify_cycle(tc.cycle, c);
  Decision d;
  d.commensurable = inner.commensurable;
  d.route = "doubling-reduction";
  d.reductions = tc.steps;
  d.reductions.push_back(t.shorthand() + " -> " + tc.cycle.shorthand() + " (index " + std::to_string(tc.index) + ")");
  d.evidence = {{"theta", t.shorthand()},
                {"reduced", tc.cycle.shorthand()},
                {"index", tc.index},
                {"cycle_route", inner.route},
                {"cycle", inner.evidence}};
  return d;
}

Decision classify_normalized(const Normalized& a, const Normalized& b) {
  Decision d;
  if (a.is_theta() && b.is_theta()) d = classify_theta(a.theta(), b.theta());
  else if (!a.is_theta() && !b.is_theta()) d = classify_cycle(a.cycle(), b.cycle());
  else if (a.is_theta()) d = classify_cross(a.theta(), b.cycle());
  else d = classify_cross(b.theta(), a.cycle());
  std::vector<std::string> red = a.reductions;
  red.insert(red.end(), b.reductions.begin(), b.reductions.end());
  red.insert(red.end(), d.reductions.begin(), d.reductions.end());
  d.reductions = red;
  return d;
}

Decision classify_graphs(const Graph& g, const Graph& g2) { return classify_normalized(normalize(g), normalize(g2)); }

Decision classify_amalgam(const SurfaceAmalgam& x, const SurfaceAmalgam& x2) {
  for (const auto* a : {&x, &x2}) {
    a->validate();
    auto G = a->graph();
    if (!G.is_tree()) throw Unsupported("amalgam classification needs a JSJ graph that is a tree");
    if (G.diameter() > 4)
      throw Unsupported("JSJ tree has diameter " + std::to_string(G.diameter()) +
                        " > 4; no commensurability criterion is available");
  }
  auto r = tree_to_racg(x), r2 = tree_to_racg(x2);
  auto inner = classify_graphs(r.gamma, r2.gamma);
  Decision d;
  d.commensurable = inner.commensurable;
  d.route = "amalgam-tree";
  d.reductions = {"amalgam -> right-angled Coxeter group " + describe_graph(r.gamma),
                  "amalgam -> right-angled Coxeter group " + describe_graph(r2.gamma)};
  d.reductions.insert(d.reductions.end(), inner.reductions.begin(), inner.reductions.end());
  d.evidence = {{"graph_route", inner.route}, {"graphs", inner.evidence}};
  return d;
}

json condition1_to_json(const Condition1& c) {
  json cls = json::array();
  for (const auto& d : c.classes)
    cls.push_back({{"class", zvector_json(d.rep)},
                   {"left", d.left},
                   {"right", d.right},
                   {"lhs", to_string(d.lhs)},
                   {"rhs", to_string(d.rhs)}});
  return {{"holds", c.holds}, {"a", c.part_a}, {"classes", cls}};
}

json condition2_to_json(const Condition2& c) {
  json j{{"holds", c.holds},
         {"common_r", c.common_r},
         {"single_class_left", c.single_class_left},
         {"single_class_right", c.single_class_right},
         {"w_commensurable", c.w_commensurable}};
  j["r"] = c.r ? json(*c.r) : json(nullptr);
  j["w"] = c.w ? qvector_json(*c.w) : json(nullptr);
  j["w_prime"] = c.w_prime ? qvector_json(*c.w_prime) : json(nullptr);
  j["w0"] = c.w0 ? zvector_json(*c.w0) : json(nullptr);
  return j;
}

json cycle_data_to_json(const CycleData& c) {
  json vs = json::array();
  for (const auto& v : c.vectors) vs.push_back(qvector_json(v));
  json j{{"vectors", vs}, {"indices", c.indices}, {"chi_A", to_string(c.chi_a)}};
  j["w"] = c.w ? qvector_json(*c.w) : json(nullptr);
  j["r"] = c.r ? json(*c.r) : json(nullptr);
  return j;
}

json decision_to_json(const Decision& d) {
  return {{"verdict", d.commensurable ? "commensurable" : "not-commensurable"},
          {"route", d.route},
          {"reductions", d.reductions},
          {"evidence", d.evidence}};
}

}  // namespace racgc
