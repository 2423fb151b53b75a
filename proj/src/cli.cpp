#include "racgc/cli.hpp"

#include "racgc/amalgam.hpp"
#include "racgc/classify.hpp"
#include "racgc/errors.hpp"
#include "racgc/graph_io.hpp"
#include "racgc/jsj.hpp"
#include "racgc/orbicomplex.hpp"
#include "racgc/racg.hpp"
#include "racgc/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace racgc {

using nlohmann::json;

namespace {

enum class Kind { graph, amalgam, bipartite, cycle_data };

struct Input {
  Kind kind = Kind::graph;
  std::string spec;
  Graph g;
  SurfaceAmalgam x;
  BipartiteGraph b;
  CycleData c;
};

std::string slurp(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return spec;
  std::ifstream in(spec);
  if (!in) throw InvalidInput("cannot read '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InvalidInput("rational must be an integer or a \"p/q\" string");
}

CycleData cycle_data_from_json(const json& j) {
  try {
    std::vector<QVector> vs;
    for (const auto& v : j.at("vectors")) {
      QVector q;
      for (const auto& e : v) q.push_back(rational_from_json(e));
      vs.push_back(q);
    }
    return CycleData::from_vectors(vs, rational_from_json(j.at("chi_A")));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad cycle-data JSON: ") + e.what());
  }
}

Input read_input(const std::string& spec) {
  Input in;
  in.spec = spec;
  if (spec.rfind("theta:", 0) == 0 || spec.rfind("cycle:", 0) == 0) {
    in.g = load_graph(spec);
    return in;
  }
  json j;
  try {
    j = json::parse(slurp(spec));
  } catch (const json::parse_error&) {
    throw InvalidInput("'" + spec + "' is not valid JSON");
  }
  if (!j.is_object()) throw InvalidInput("'" + spec + "' is not a JSON object");
  const std::string format = j.value("format", "");
  if (format == "amalgam/1") {
    in.kind = Kind::amalgam;
    in.x = amalgam_from_json(j);
  } else if (format == "bipartite/1") {
    in.kind = Kind::bipartite;
    in.b = bipartite_from_json(j);
  } else if (format == "cycle-data/1") {
    in.kind = Kind::cycle_data;
    in.c = cycle_data_from_json(j);
  } else {
    in.g = graph_from_json(j);
  }
  return in;
}

const Graph& need_graph(const Input& in) {
  if (in.kind != Kind::graph) throw InvalidInput("'" + in.spec + "' is not a graph");
  return in.g;
}

json canonical(const Input& in) {
  switch (in.kind) {
    case Kind::graph: return {{"shape", describe_graph(in.g)}, {"graph", graph_to_json(in.g)}};
    case Kind::amalgam: return amalgam_to_json(in.x);
    case Kind::bipartite: return bipartite_to_json(in.b);
    case Kind::cycle_data: return cycle_data_to_json(in.c);
  }
  return nullptr;
}

json validation_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"passed", c.passed}};
    if (c.witness) e["witness"] = *c.witness;
    checks.push_back(e);
  }
  return {{"checks", checks}, {"in_G", r.in_G}, {"in_G_3convex", r.in_G_3convex}};
}

json recognize_json(const Graph& g) {
  if (auto t = recognize_gen_theta(g)) return {{"family", "theta"}, {"shorthand", t->shorthand()}, {"n", t->n}, {"k", t->k()}};
  if (auto c = recognize_theta_cycle(g)) {
    std::vector<int> I;
    for (int i : c->nontrivial()) I.push_back(i + 1);
    return {{"family", "cycle"},
            {"shorthand", c->shorthand()},
            {"components", c->components},
            {"N", c->N()},
            {"r", c->r()},
            {"I", I},
            {"hubs", c->hubs}};
  }
  return {{"family", "none"}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

struct Outcome {
  json result;
  std::string text;
  int code = 0;
};

Outcome cmd_validate(const Input& in) {
  auto r = validate(need_graph(in));
  std::ostringstream t;
  for (const auto& c : r.checks) {
    t << c.name << ": " << (c.passed ? "pass" : "FAIL");
    if (c.witness) {
      t << " [";
      for (std::size_t i = 0; i < c.witness->size(); ++i) t << (i ? " " : "") << (*c.witness)[i];
      t << "]";
    }
    t << "\n";
  }
  t << "in G: " << yes(r.in_G) << "\nin G (3-convex): " << yes(r.in_G_3convex) << "\n";
  return {validation_json(r), t.str()};
}

Outcome cmd_euler(const Input& in) {
  auto chi = euler_characteristic(need_graph(in));
  return {{{"euler_characteristic", to_string(chi)}}, "chi = " + to_string(chi) + "\n"};
}

Outcome cmd_recognize(const Input& in) {
  auto j = recognize_json(need_graph(in));
  std::string fam = j.at("family");
  return {j, fam == "none" ? "neither a generalized theta-graph nor a cycle of them\n" : j.at("shorthand").get<std::string>() + "\n"};
}

Outcome cmd_jsj(const Input& in) {
  const auto& g = need_graph(in);
  auto d = jsj_decomposition(g);
  auto j = jsj_to_json(g, d);
  j["diameter"] = jsj_diameter(d);
  std::ostringstream t;
  for (std::size_t i = 0; i < d.type1.size(); ++i)
    t << "x" << i << " {" << g.name(d.type1[i].first) << "," << g.name(d.type1[i].second) << "}\n";
  for (std::size_t k = 0; k < d.type2.size(); ++k) {
    t << "y" << k << " {";
    for (std::size_t m = 0; m < d.type2[k].size(); ++m) t << (m ? "," : "") << g.name(d.type2[k][m]);
    t << "}\n";
  }
  for (const auto& [a, b] : d.edges) t << "x" << a << " - y" << b << "\n";
  t << "diameter " << jsj_diameter(d) << "\n";
  return {j, t.str()};
}

Outcome cmd_vectors(const Input& in) {
  CycleData c;
  if (in.kind == Kind::cycle_data) {
    c = in.c;
  } else {
    const auto& g = need_graph(in);
    if (auto t = recognize_gen_theta(g)) {
      if (!t->three_convex())
        throw Unsupported(t->shorthand() + " is not 3-convex; double it first (" +
                          double_theta(*t).shorthand() + ")");
      auto v = theta_vector(*t);
      return {{{"family", "theta"}, {"v", qvector_json(v)}}, to_string(v) + "\n"};
    }
    auto cyc = recognize_theta_cycle(g);
    if (!cyc) throw Unsupported("graph is neither a generalized theta-graph nor a cycle of them");
    if (!cyc->three_convex()) throw Unsupported(cyc->shorthand() + " is not 3-convex");
    c = cycle_data(*cyc);
  }
  auto j = cycle_data_to_json(c);
  j["family"] = "cycle";
  std::ostringstream t;
  for (std::size_t i = 0; i < c.vectors.size(); ++i)
    t << "v_" << c.indices[i] + 1 << " = " << to_string(c.vectors[i]) << "\n";
  t << "chi(W_A) = " << to_string(c.chi_a) << "\n";
  t << "w = " << (c.w ? to_string(*c.w) : std::string("none")) << "\n";
  return {j, t.str()};
}

Outcome cmd_classify(const Input& a, const Input& b, bool witness) {
  if (a.kind != b.kind) throw InvalidInput("both inputs must be of the same kind");
  Decision d;
  json w;
  switch (a.kind) {
    case Kind::graph:
      d = classify_graphs(a.g, b.g);
      if (witness && d.commensurable) w = witness_for_graphs(a.g, b.g, d);
      break;
    case Kind::cycle_data:
      d = classify_cycle_data(a.c, b.c);
      if (witness && d.commensurable) w = witness_for_cycle_data(a.c, b.c, d);
      break;
    case Kind::amalgam:
      d = classify_amalgam(a.x, b.x);
      if (witness && d.commensurable) {
        auto r = tree_to_racg(a.x), r2 = tree_to_racg(b.x);
        auto inner = classify_graphs(r.gamma, r2.gamma);
        w = {{"conversion", racg_conversion_to_json(r)},
             {"conversion_prime", racg_conversion_to_json(r2)},
             {"graphs", witness_for_graphs(r.gamma, r2.gamma, inner)}};
        w["valid"] = w["conversion"]["valid"] == true && w["conversion_prime"]["valid"] == true &&
                     w["graphs"]["valid"] == true;
      }
      break;
    case Kind::bipartite: throw InvalidInput("classify needs graphs, amalgams or cycle data");
  }
  auto j = decision_to_json(d);
  std::ostringstream t;
  t << (d.commensurable ? "commensurable" : "not commensurable") << " (" << d.route << ")\n";
  for (const auto& r : d.reductions) t << "  " << r << "\n";
  if (witness && d.commensurable) {
    if (w.at("valid") != true) throw InvariantFailure("witness failed to validate");
    j["witness"] = w;
    t << "witness: validated\n";
  }
  return {j, t.str(), d.commensurable ? 0 : 1};
}

Outcome cmd_cover16(const Input& in) {
  const auto& g = need_graph(in);
  auto c = cover16(g);
  auto bad = c.problems();
  if (!bad.empty()) throw InvariantFailure("cover16: " + bad.front());
  std::ostringstream t;
  for (const auto& p : c.amalgam.type2) t << p.id << " " << Surface{p.genus, static_cast<long long>(p.boundary.size())}.str() << "\n";
  t << "chi(X) = " << to_string(amalgam_euler(c.amalgam)) << " = 16 * " << to_string(euler_characteristic(g)) << "\n";
  return {cover16_to_json(g, c), t.str()};
}

Outcome cmd_to_racg(const Input& in) {
  if (in.kind != Kind::amalgam) throw InvalidInput("'" + in.spec + "' is not a surface amalgam");
  auto r = tree_to_racg(in.x);
  std::ostringstream t;
  t << describe_graph(r.gamma) << "\n";
  if (r.pos_genus_applied) t << "positive-genus cover applied (degree 3)\n";
  t << "chi: " << to_string(r.chi_input) << " -> " << to_string(r.chi_lifted) << " -> " << to_string(r.chi_orbicomplex) << "\n";
  return {racg_conversion_to_json(r), t.str()};
}

BipartiteGraph need_bipartite(const Input& in) {
  if (in.kind == Kind::bipartite) return in.b;
  if (in.kind == Kind::amalgam) return in.x.graph();
  throw InvalidInput("'" + in.spec + "' is not a bipartite graph or surface amalgam");
}

Outcome cmd_halfcover(const Input& a, const Input* b) {
  const std::string note = "targets are restricted to images of half-coverings; results are for the finite graph, not the JSJ tree";
  auto l = need_bipartite(a);
  std::ostringstream t;
  json j{{"note", note}, {"bound", max_search_vertices()}};
  if (!b) {
    auto ts = tree_half_cover_targets(l);
    json arr = json::array();
    for (const auto& w : ts) arr.push_back(half_covering_to_json(w.map));
    j["targets"] = arr;
    j["tree_targets"] = ts.size();
    t << ts.size() << " tree target(s) within " << max_search_vertices() << " vertices\n";
    for (const auto& w : ts) t << "  " << w.target.size() << " vertices\n";
  } else {
    auto l2 = need_bipartite(*b);
    auto c = common_half_cover_target(l, l2);
    j["exists"] = c.has_value();
    if (c) {
      j["target"] = bipartite_to_json(c->target);
      j["from_first"] = half_covering_to_json(c->from_first);
      j["from_second"] = half_covering_to_json(c->from_second);
      t << "common target with " << c->target.size() << " vertices\n";
    } else {
      t << "no common target within " << max_search_vertices() << " vertices\n";
    }
  }
  t << "note: " << note << "\n";
  return {j, t.str()};
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"commensurability toolkit for right-angled Coxeter groups", "racgc"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.fallthrough();

  std::string g1, g2;
  std::vector<std::string> lams;
  bool witness = false;
  auto* validate_c = app.add_subcommand("validate", "check the assumptions on a defining graph");
  validate_c->add_option("graph", g1)->required();
  auto* euler_c = app.add_subcommand("euler", "euler characteristic of W_Γ");
  euler_c->add_option("graph", g1)->required();
  auto* recognize_c = app.add_subcommand("recognize", "recognize theta-graphs and cycles of theta-graphs");
  recognize_c->add_option("graph", g1)->required();
  auto* jsj_c = app.add_subcommand("jsj", "visual JSJ decomposition");
  jsj_c->add_option("graph", g1)->required();
  auto* vectors_c = app.add_subcommand("vectors", "euler characteristic vectors");
  vectors_c->add_option("graph", g1)->required();
  auto* classify_c = app.add_subcommand("classify", "decide abstract commensurability");
  classify_c->add_option("first", g1)->required();
  classify_c->add_option("second", g2)->required();
  classify_c->add_flag("--witness", witness, "build and validate a certificate");
  auto* cover_c = app.add_subcommand("cover16", "degree 16 surface amalgam cover");
  cover_c->add_option("graph", g1)->required();
  auto* racg_c = app.add_subcommand("amalgam-to-racg", "right-angled Coxeter group for an amalgam over a tree");
  racg_c->add_option("amalgam", g1)->required();
  auto* half_c = app.add_subcommand("halfcover", "half-covering targets");
  half_c->add_option("lambda", lams)->required()->expected(1, 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    Outcome o;
    json inputs = json::array();
    auto load = [&](const std::string& s) {
      auto in = read_input(s);
      inputs.push_back(canonical(in));
      return in;
    };
    if (name == "classify") {
      auto a = load(g1), b = load(g2);
      o = cmd_classify(a, b, witness);
    } else if (name == "halfcover") {
      auto a = load(lams[0]);
      if (lams.size() == 2) {
        auto b = load(lams[1]);
        o = cmd_halfcover(a, &b);
      } else {
        o = cmd_halfcover(a, nullptr);
      }
    } else {
      auto a = load(g1);
      if (name == "validate") o = cmd_validate(a);
      else if (name == "euler") o = cmd_euler(a);
      else if (name == "recognize") o = cmd_recognize(a);
      else if (name == "jsj") o = cmd_jsj(a);
      else if (name == "vectors") o = cmd_vectors(a);
      else if (name == "cover16") o = cmd_cover16(a);
      else o = cmd_to_racg(a);
    }
    if (as_json) out << json{{"command", name}, {"inputs", inputs}, {"result", o.result}}.dump(2) << "\n";
    else out << o.text;
    return o.code;
  } catch (const InvalidInput& e) {
    err << "racgc " << name << ": invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Unsupported& e) {
    err << "racgc " << name << ": unsupported: " << e.what() << "\n";
    return 3;
  } catch (const InvariantFailure& e) {
    err << "racgc " << name << ": internal check failed: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace racgc
