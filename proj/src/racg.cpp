#include "racgc/racg.hpp"

#include "racgc/errors.hpp"
#include "racgc/graph_io.hpp"

#include <algorithm>
#include <map>

namespace racgc {

Rational euler_characteristic(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (auto w : g.neighbors(u))
      if (w != v && g.adjacent(v, w))
        throw InvalidInput("euler characteristic formula needs a triangle-free graph");
  return Rational(1) - Rational(g.size(), 2) + Rational(g.edge_count(), 4);
}

Rational branch_group_euler(int total_vertices) {
  if (total_vertices < 2) throw InvalidInput("a branch has at least 2 vertices");
  return Rational(3 - total_vertices, 4);
}

Rational branch_group_euler(const Branch& b) { return branch_group_euler(b.vertex_count()); }

static std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Graph GeneralizedTheta::to_graph() const { return theta_graph(n); }

std::string GeneralizedTheta::shorthand() const { return "theta:" + join_ints(n); }

GeneralizedTheta make_theta(std::vector<int> n) {
  if (n.empty()) throw InvalidInput("a generalized theta-graph needs at least one branch");
  for (int x : n)
    if (x < 0) throw InvalidInput("negative branch length");
  std::sort(n.begin(), n.end());
  return GeneralizedTheta{std::move(n)};
}

std::vector<int> ThetaCycle::r() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<int> ThetaCycle::nontrivial() const {
  std::vector<int> out;
  for (int i = 0; i < N(); ++i)
    if (components[i].size() > 1) out.push_back(i);
  return out;
}

bool ThetaCycle::three_convex() const {
  for (const auto& c : components)
    for (int x : c)
      if (x < 2) return false;
  return true;
}

Graph ThetaCycle::to_graph() const { return cycle_graph(components); }

std::vector<std::string> ThetaCycle::a_set(const Graph& g) const {
  std::vector<std::string> out;
  for (int i = 0; i < N(); ++i) out.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < N(); ++i)
    if (components[i].size() == 1)
      for (int m = 1; m <= components[i][0]; ++m)
        out.push_back("c" + std::to_string(i + 1) + "_1_" + std::to_string(m));
  for (const auto& s : out) g.id(s);
  return out;
}

std::string ThetaCycle::shorthand() const {
  std::string s = "cycle:[";
  for (std::size_t i = 0; i < components.size(); ++i) s += (i ? ",[" : "[") + join_ints(components[i]) + "]";
  return s + "]";
}

static ThetaCycle canonical_cycle(std::vector<std::vector<int>> comps, std::vector<std::string> hubs) {
  const int N = static_cast<int>(comps.size());
  for (auto& c : comps) std::sort(c.begin(), c.end());
  if (hubs.empty()) hubs.assign(N, "");
  std::vector<std::vector<int>> best_c;
  std::vector<std::string> best_h;
  for (int s = 0; s < N; ++s)
    for (int dir : {1, -1}) {
      std::vector<std::vector<int>> c(N);
      std::vector<std::string> h(N);
      for (int j = 0; j < N; ++j) {
        if (dir == 1) {
          c[j] = comps[(s + j) % N];
          h[j] = hubs[(s + j) % N];
        } else {
          c[j] = comps[((s - j - 1) % N + N) % N];
          h[j] = hubs[((s - j) % N + N) % N];
        }
      }
      if (best_c.empty() || std::tie(c, h) < std::tie(best_c, best_h)) {
        best_c = std::move(c);
        best_h = std::move(h);
      }
    }
  ThetaCycle out{std::move(best_c), std::move(best_h)};
  if (std::all_of(out.hubs.begin(), out.hubs.end(), [](const std::string& x) { return x.empty(); }))
    out.hubs.clear();
  return out;
}

ThetaCycle make_cycle(std::vector<std::vector<int>> components) {
  cycle_graph(components);  // validates shape
  return canonical_cycle(std::move(components), {});
}

std::optional<GeneralizedTheta> recognize_gen_theta(const Graph& g) {
  auto ess = essential_vertices(g);
  if (ess.size() != 2) return std::nullopt;
  auto bs = branches(g);
  long long nv = 2, ne = 0;
  std::vector<int> n;
  for (const auto& b : bs) {
    if (b.u != ess[0] || b.v != ess[1]) return std::nullopt;
    n.push_back(static_cast<int>(b.interior.size()));
    nv += static_cast<long long>(b.interior.size());
    ne += static_cast<long long>(b.interior.size()) + 1;
  }
  if (nv != g.size() || ne != g.edge_count()) return std::nullopt;
  std::sort(n.begin(), n.end());
  return GeneralizedTheta{n, g.name(ess[0]), g.name(ess[1])};
}

std::optional<ThetaCycle> recognize_theta_cycle(const Graph& g) {
  auto ess = essential_vertices(g);
  const int N = static_cast<int>(ess.size());
  if (N < 3) return std::nullopt;
  auto bs = branches(g);
  long long nv = N, ne = 0;
  std::map<std::pair<VertexId, VertexId>, std::vector<int>> between;
  std::map<VertexId, std::vector<VertexId>> partners;
  for (const auto& b : bs) {
    nv += static_cast<long long>(b.interior.size());
    ne += static_cast<long long>(b.interior.size()) + 1;
    auto& lst = between[{b.u, b.v}];
    if (lst.empty()) {
      partners[b.u].push_back(b.v);
      partners[b.v].push_back(b.u);
    }
    lst.push_back(static_cast<int>(b.interior.size()));
  }
  if (nv != g.size() || ne != g.edge_count()) return std::nullopt;
  if (static_cast<int>(between.size()) != N) return std::nullopt;
  for (auto v : ess)
    if (partners[v].size() != 2) return std::nullopt;
  std::vector<VertexId> order{ess[0]};
  VertexId prev = -1, cur = ess[0];
  for (int step = 1; step < N; ++step) {
    const auto& p = partners[cur];
    VertexId next = p[0] != prev ? p[0] : p[1];
    if (next == ess[0]) return std::nullopt;  // closed up early: more than one cycle
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  const auto& last = partners[cur];
  if (last[0] != ess[0] && last[1] != ess[0]) return std::nullopt;
  std::vector<std::vector<int>> comps(N);
  std::vector<std::string> hubs(N);
  for (int i = 0; i < N; ++i) {
    VertexId x = order[i], y = order[(i + 1) % N];
    comps[i] = between.at({std::min(x, y), std::max(x, y)});
    hubs[i] = g.name(x);
  }
  for (int i = 0; i < N; ++i)
    if (comps[i].size() == 1 && comps[(i + 1) % N].size() == 1) return std::nullopt;
  return canonical_cycle(std::move(comps), std::move(hubs));
}

QVector theta_vector(const GeneralizedTheta& t) {
  if (!t.three_convex())
    throw Unsupported("theta_vector needs a 3-convex theta-graph (n_1 >= 2); reduce with double_theta first");
  QVector v;
  for (int x : t.n) v.push_back(Rational(1 - x, 4));
  return sorted_desc(std::move(v));
}

CycleData CycleData::from_vectors(std::vector<QVector> vectors, Rational chi_a) {
  CycleData d;
  for (auto& v : vectors) {
    if (v.empty()) throw InvalidInput("empty euler vector");
    for (const auto& x : v)
      if (x >= 0) throw InvalidInput("euler vector entries must be negative");
    d.vectors.push_back(sorted_desc(std::move(v)));
  }
  for (std::size_t i = 0; i < d.vectors.size(); ++i) d.indices.push_back(static_cast<int>(i));
  d.chi_a = chi_a;
  if (!d.vectors.empty()) {
    std::size_t r = d.vectors[0].size();
    bool common = std::all_of(d.vectors.begin(), d.vectors.end(),
                              [&](const QVector& v) { return v.size() == r; });
    if (common) {
      QVector w(r, Rational(0));
      for (const auto& v : d.vectors)
        for (std::size_t j = 0; j < r; ++j) w[j] += v[j];
      w.push_back(chi_a);
      d.w = sorted_desc(std::move(w));
      d.r = static_cast<int>(r);
    }
  }
  return d;
}

CycleData cycle_data(const ThetaCycle& c) {
  if (!c.three_convex()) throw Unsupported("cycle_data needs a 3-convex cycle of generalized theta-graphs");
  std::vector<QVector> vs;
  auto I = c.nontrivial();
  for (int i : I) {
    QVector v;
    for (int x : c.components[i]) v.push_back(Rational(1 - x, 4));
    vs.push_back(std::move(v));
  }
  Graph g = c.to_graph();
  std::vector<VertexId> A;
  for (const auto& s : c.a_set(g)) A.push_back(g.id(s));
  std::sort(A.begin(), A.end());
  auto d = CycleData::from_vectors(std::move(vs), euler_characteristic(induced_subgraph(g, A)));
  d.indices = I;
  return d;
}

GeneralizedTheta double_theta(const GeneralizedTheta& t) {
  if (t.n.empty() || t.n.front() != 1)
    throw InvalidInput("double_theta needs n_1 = 1");
  std::vector<int> n;
  for (std::size_t i = 1; i < t.n.size(); ++i) {
    n.push_back(t.n[i]);
    n.push_back(t.n[i]);
  }
  if (n.empty()) throw InvalidInput("double_theta needs at least two branches");
  return make_theta(std::move(n));
}

ThetaToCycle theta_to_cycle(const GeneralizedTheta& t) {
  if (t.k() < 3) throw InvalidInput("theta_to_cycle needs at least 3 branches");
  if (!t.three_convex()) throw InvalidInput("theta_to_cycle needs a 3-convex theta-graph");
  std::vector<int> rest(t.n.begin() + 1, t.n.end());
  ThetaToCycle out;
  out.steps.push_back("double " + t.shorthand() + " over the vertex of branch 1 next to a");
  if (t.n[0] >= 3) {
    out.cycle = make_cycle({rest, {2 * t.n[0] - 3}, rest});
    out.index = 2;
  } else {
    out.steps.push_back("double again over the middle vertex of the single-branch component");
    out.cycle = make_cycle({rest, rest, rest, rest});
    out.index = 4;
  }
  return out;
}

}  // namespace racgc

namespace racgc {

std::string describe_graph(const Graph& g) {
  if (auto t = recognize_gen_theta(g)) return t->shorthand();
  if (auto c = recognize_theta_cycle(g)) return c->shorthand();
  return "graph with " + std::to_string(g.size()) + " vertices and " + std::to_string(g.edge_count()) + " edges";
}

}  // namespace racgc
