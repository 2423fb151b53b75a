// Acceptance run: one PASS/FAIL line per criterion, exit status = number of failures.

#include "racgc/classify.hpp"
#include "racgc/cli.hpp"
#include "racgc/errors.hpp"
#include "racgc/graph_io.hpp"
#include "racgc/jsj.hpp"
#include "racgc/orbicomplex.hpp"
#include "racgc/witness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

using namespace racgc;

namespace {

std::mt19937 rng(20240611);

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational q(const std::string& s) { return parse_rational(s); }

QVector qv(std::initializer_list<const char*> xs) {
  QVector v;
  for (auto x : xs) v.push_back(q(x));
  return v;
}

// χ of a right-angled Coxeter group on a triangle-free graph: 1 − V/2 + E/4.
Rational chi_oracle(const Graph& g) { return Rational(1) - Rational(g.size(), 2) + Rational(g.edge_count(), 4); }

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<int> random_theta(int kmin, int kmax, int nmin, int nmax) {
  std::vector<int> n(uniform(kmin, kmax));
  for (auto& x : n) x = uniform(nmin, nmax);
  return n;
}

std::vector<std::vector<int>> random_cycle() {
  for (;;) {
    int N = uniform(3, 5);
    std::vector<std::vector<int>> comps(N);
    for (auto& c : comps) {
      c.resize(uniform(1, 3));
      for (auto& x : c) x = uniform(2, 5);
    }
    bool ok = true;
    for (int i = 0; i < N; ++i)
      if (comps[i].size() == 1 && comps[(i + 1) % N].size() == 1) ok = false;
    if (ok) return comps;
  }
}

Graph shuffled(const Graph& g) {
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names;
  for (int v = 0; v < g.size(); ++v) names.push_back("v" + std::to_string(perm[v]));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(names[a], names[b]);
  return Graph(names, edges);
}

// ------------------------------------------------------------------ 1

void c1(Criterion& c) {
  std::ostringstream out, err;
  std::vector<std::string> args{"racgc", "vectors", "theta:2,2,3,4"};
  std::vector<char*> argv;
  for (auto& s : args) argv.push_back(s.data());
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) c.fail("exit code " + std::to_string(code));
  if (out.str() != "(-1/4,-1/4,-1/2,-3/4)\n") c.fail("cli printed " + out.str());
  if (theta_vector(make_theta({2, 2, 3, 4})) != qv({"-1/4", "-1/4", "-1/2", "-3/4"})) c.fail("theta_vector differs");
}

// ------------------------------------------------------------------ 2

void c2(Criterion& c) {
  auto v1 = qv({"-1/4", "-1/2"}), v3 = qv({"-3/4", "-3/2"});
  auto d = CycleData::from_vectors({v1, v1, v3}, q("-5/4"));
  if (!d.w) return c.fail("w absent");
  if (*d.w != qv({"-5/4", "-5/4", "-5/2"})) c.fail("w = " + to_string(*d.w));
}

// ------------------------------------------------------------------ 3, 4

const QVector U = qv({"-1/4", "-1/4", "-1/2"});
const QVector V = qv({"-1/4", "-1/2", "-1/2"});

void c3(Criterion& c) {
  auto a = CycleData::from_vectors({U, U, V}, q("-1/2"));
  auto b = CycleData::from_vectors({scaled(U, 4), scaled(V, 2)}, q("-1"));
  auto one = condition1(a, b);
  auto two = condition2(a, b);
  if (!one.holds) c.fail("condition (1) fails");
  std::map<std::string, std::pair<Rational, Rational>> sides;
  for (const auto& cl : one.classes) sides[to_string(cl.rep)] = {cl.lhs, cl.rhs};
  auto check = [&](const std::string& rep, const Rational& want) {
    auto it = sides.find(rep);
    if (it == sides.end()) return c.fail("class " + rep + " missing");
    if (it->second.first != want || it->second.second != want)
      c.fail("class " + rep + " sides " + to_string(it->second.first) + ", " + to_string(it->second.second));
  };
  check("(1,1,2)", 2);
  check("(1,2,2)", q("5/4"));
  if (two.holds) c.fail("condition (2) holds");
}

void c4(Criterion& c) {
  auto a = CycleData::from_vectors({U, U, scaled(U, 2)}, q("-1/2"));
  auto b = CycleData::from_vectors({V, scaled(V, 2)}, q("-3"));
  auto one = condition1(a, b);
  auto two = condition2(a, b);
  if (one.holds) c.fail("condition (1) holds");
  if (!two.holds) c.fail("condition (2) fails");
  if (!a.w || *a.w != qv({"-1/2", "-1", "-1", "-2"})) c.fail("w differs");
  if (!b.w || *b.w != qv({"-3/4", "-3/2", "-3/2", "-3"})) c.fail("w' differs");
  if (!two.w0 || *two.w0 != ZVector{1, 2, 2, 4}) c.fail("shared class is not (1,2,2,4)");
  // proportionality by cross products
  if (a.w && b.w)
    for (std::size_t i = 0; i < a.w->size(); ++i)
      for (std::size_t j = 0; j < a.w->size(); ++j)
        if ((*a.w)[i] * (*b.w)[j] != (*a.w)[j] * (*b.w)[i]) c.fail("w and w' are not proportional");
}

// ------------------------------------------------------------------ 5

using SurfaceKey = std::pair<Integer, Integer>;

std::vector<SurfaceKey> surface_multiset(const SurfaceAmalgam& x) {
  std::vector<SurfaceKey> out;
  for (std::size_t j = 0; j < x.type2.size(); ++j) {
    auto s = x.surface(static_cast<int>(j));
    out.emplace_back(s.genus, s.boundary);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_cover16(Criterion& c, const Graph& g, std::vector<SurfaceKey> expect, int L_expect) {
  auto cov = cover16(g);
  const auto chi = chi_oracle(g);
  if (cov.euler != 16 * chi || amalgam_euler(cov.amalgam) != 16 * chi)
    return c.fail(describe_graph(g) + ": χ(X) ≠ 16χ(W)");
  auto got = surface_multiset(cov.amalgam);
  std::sort(expect.begin(), expect.end());
  if (got != expect) return c.fail(describe_graph(g) + ": surfaces differ");
  for (const auto& [genus, b] : got)
    if (genus < 2) return c.fail(describe_graph(g) + ": genus < 2");
  for (const auto& p : cov.pieces)
    if (!p.branch) {
      if (p.L != L_expect || p.parts.empty() || p.parts.front() != Surface{3 * L_expect - 7, 2 * L_expect})
        return c.fail(describe_graph(g) + ": essential part is not S_{3L-7,2L}");
    }
  if (!cov.problems().empty()) c.fail(describe_graph(g) + ": " + cov.problems().front());
}

void c5(Criterion& c) {
  for (int trial = 0; trial < 50; ++trial) {
    auto n = random_theta(3, 6, 2, 7);
    std::vector<SurfaceKey> expect;
    for (int x : n) expect.emplace_back(2 * (x - 1), 2);  // polygon with x + 3 sides
    check_cover16(c, theta_graph(n), expect, 0);
  }
  for (int trial = 0; trial < 50; ++trial) {
    auto comps = random_cycle();
    const int N = static_cast<int>(comps.size());
    std::vector<SurfaceKey> expect;
    Integer genus = 3 * N - 7;
    int ell = 0;
    for (const auto& comp : comps) {
      if (comp.size() == 1) {
        genus += 2 * comp[0] - 1;
      } else {
        ++ell;
        for (int x : comp) expect.emplace_back(2 * (x - 1), 2);
      }
    }
    expect.emplace_back(genus, 2 * ell);
    check_cover16(c, cycle_graph(comps), expect, N);
  }
}

// ------------------------------------------------------------------ 6

void partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) return out.push_back(cur);
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

void c6(Criterion& c) {
  long long cases = 0;
  for (int g = 1; g <= 4; ++g)
    for (int b = 1; b <= 4; ++b)
      for (int D = 1; D <= 6; ++D) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(D, D, cur, parts);
        const long long chi = 2 - 2 * g - b;
        std::vector<int> idx(b, 0);
        for (;;) {
          std::vector<DegreeMultiset> specs;
          long long bp = 0;
          for (int i = 0; i < b; ++i) {
            std::vector<long long> ds(parts[idx[i]].begin(), parts[idx[i]].end());
            specs.push_back(degrees(ds));
            bp += static_cast<long long>(ds.size());
          }
          bool parity = ((bp - D * chi) % 2 + 2) % 2 == 0;
          auto s = neumann_cover(Surface{g, b}, D, specs);
          ++cases;
          if (s.has_value() != parity) return c.fail("feasibility differs at S_{" + std::to_string(g) + "," + std::to_string(b) + "}");
          if (s) {
            long long twice = 2 - bp - D * chi;
            if (twice < 0 || twice % 2 != 0 || s->genus != twice / 2 || s->boundary != bp)
              return c.fail("cover surface differs");
          }
          int i = 0;
          while (i < b && ++idx[i] == static_cast<int>(parts.size())) idx[i++] = 0;
          if (i == b) break;
        }
      }
  c.detail = std::to_string(cases) + " cases";
}

// ------------------------------------------------------------------ 7

void c7(Criterion& c) {
  auto cert = pos_genus_cover(Surface{0, 3});
  if (cert.cover != Surface{1, 3}) c.fail("cover is " + cert.cover.str());
  if (cert.degree != 3) c.fail("degree is not 3");
  if (!surface_cover_violations(cert).empty()) c.fail(surface_cover_violations(cert).front());
}

// ------------------------------------------------------------------ 8

struct PairCase {
  std::string kind;
  std::function<Decision()> classify;
  std::function<nlohmann::json(const Decision&)> witness;
};

std::vector<QVector> split_class(const QVector& base, Integer total, int parts) {
  std::vector<Integer> m(parts, 1);
  for (Integer left = total - parts; left > 0; --left) m[uniform(0, parts - 1)] += 1;
  std::vector<QVector> out;
  for (const auto& x : m) out.push_back(scaled(base, Rational(x)));
  return out;
}

QVector base_vector(const ZVector& rep) {
  QVector v;
  for (const auto& x : rep) v.push_back(Rational(-x, 4));
  return v;
}

ZVector random_rep(int r) {
  ZVector u(r);
  for (auto& x : u) x = uniform(1, 4);
  std::sort(u.begin(), u.end());
  Integer g = 0;
  for (const auto& x : u) g = gcd(g, x);
  for (auto& x : u) x /= g;
  return u;
}

// Vector-level data satisfying condition (1): matching classes with
// χ(W_A')·Σ = χ(W_A)·Σ' obtained by scaling the class sums by λ = χ(W_A')/χ(W_A).
std::pair<CycleData, CycleData> cond1_pair() {
  int classes = uniform(1, 2);
  std::vector<QVector> left, right;
  int a = 0;
  const std::vector<std::pair<int, int>> lambdas{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}};
  auto [ln, ld] = lambdas[uniform(0, 4)];
  std::vector<std::pair<ZVector, int>> picks;
  for (int p = 0; p < classes; ++p) picks.push_back({random_rep(uniform(2, 3)), uniform(1, 2)});
  a = uniform(3, 6) * ld * (ln < ld ? 2 : 1);
  for (auto& [rep, count] : picks) {
    Integer total = count + uniform(0, 2);
    if (total * ln % ld != 0) total *= ld;
    auto ls = split_class(base_vector(rep), total, count);
    left.insert(left.end(), ls.begin(), ls.end());
    Integer total2 = total * ln / ld;
    int parts = static_cast<int>(std::min<Integer>(total2, uniform(1, 3)));
    auto rs = split_class(base_vector(rep), total2, parts);
    right.insert(right.end(), rs.begin(), rs.end());
  }
  std::shuffle(left.begin(), left.end(), rng);
  std::shuffle(right.begin(), right.end(), rng);
  Rational chi(-a, 4);
  Rational chi2 = chi * Rational(ln, ld);
  return {CycleData::from_vectors(left, chi), CycleData::from_vectors(right, chi2)};
}

// Vector-level data satisfying condition (2): both w-vectors are multiples of
// a common w₀, with χ(W_A) sitting at a chosen entry on each side.
std::pair<CycleData, CycleData> cond2_pair() {
  int r = uniform(2, 3);
  ZVector w0 = random_rep(r + 1);
  auto side = [&]() {
    int k = uniform(0, r);
    ZVector hat;
    for (int i = 0; i <= r; ++i)
      if (i != k) hat.push_back(w0[i]);
    Integer g = 0;
    for (const auto& x : hat) g = gcd(g, x);
    ZVector u;
    for (const auto& x : hat) u.push_back(x / g);
    int n = uniform(1, 3);
    Integer c = uniform(1, 3);
    while (c * g < n) ++c;
    while (2 * c * w0[k] < n - 1) ++c;
    auto vs = split_class(base_vector(u), c * g, n);
    return CycleData::from_vectors(vs, Rational(-c * w0[k], 4));
  };
  auto a = side();
  auto b = side();
  return {a, b};
}

void c8(Criterion& c) {
  std::vector<PairCase> cases;
  for (int t = 0; t < 50; ++t) {
    auto d = random_theta(3, 5, 1, 3);
    int s = uniform(1, 4), s2 = uniform(1, 4);
    std::vector<int> n, n2;
    for (int x : d) {
      n.push_back(1 + s * x);
      n2.push_back(1 + s2 * x);
    }
    auto g = theta_graph(n), g2 = shuffled(theta_graph(n2));
    cases.push_back({"theta", [=] { return classify_graphs(g, g2); }, [=](const Decision& dd) { return witness_for_graphs(g, g2, dd); }});
  }
  for (int t = 0; t < 50; ++t) {
    auto [a, b] = cond1_pair();
    cases.push_back({"cond1", [=] { return classify_cycle_data(a, b); },
                     [=](const Decision& dd) { return witness_for_cycle_data(a, b, dd); }});
  }
  for (int t = 0; t < 50; ++t) {
    auto [a, b] = cond2_pair();
    cases.push_back({"cond2", [=] { return classify_cycle_data(a, b); },
                     [=](const Decision& dd) { return witness_for_cycle_data(a, b, dd); }});
  }
  for (int t = 0; t < 25; ++t) {
    auto g = cycle_graph(random_cycle());
    auto g2 = shuffled(g);
    cases.push_back({"cycle", [=] { return classify_graphs(g, g2); }, [=](const Decision& dd) { return witness_for_graphs(g, g2, dd); }});
  }
  for (int t = 0; t < 25; ++t) {
    auto th = make_theta(random_theta(3, 4, 2, 5));
    auto g = th.to_graph(), g2 = shuffled(theta_to_cycle(th).cycle.to_graph());
    cases.push_back({"cross", [=] { return classify_graphs(g, g2); }, [=](const Decision& dd) { return witness_for_graphs(g, g2, dd); }});
  }
  int ok = 0;
  for (const auto& pc : cases) {
    try {
      auto d = pc.classify();
      if (!d.commensurable) {
        c.fail(pc.kind + " pair engineered to be commensurable was rejected");
        continue;
      }
      auto w = pc.witness(d);
      std::function<bool(const nlohmann::json&)> all_valid = [&](const nlohmann::json& j) {
        if (j.is_object()) {
          if (j.contains("valid") && !j.at("valid").get<bool>()) return false;
          for (const auto& [k, v] : j.items())
            if (!all_valid(v)) return false;
        }
        return true;
      };
      if (!all_valid(w)) c.fail(pc.kind + " witness does not re-validate");
      else ++ok;
    } catch (const std::exception& e) {
      c.fail(pc.kind + ": " + e.what());
    }
  }
  if (c.pass) c.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " witnesses";
}

// ------------------------------------------------------------------ 9

SurfaceAmalgam random_tree_amalgam() {
  SurfaceAmalgam x;
  int ny = 0, nx = 0;
  auto genus = [] { return Integer(uniform(1, 3)); };
  auto leaf = [&](const std::string& circle) {
    x.type2.push_back({"y" + std::to_string(ny++), genus(), {circle}});
  };
  std::string root = "x" + std::to_string(nx++);
  x.type1.push_back(root);
  int val = uniform(3, 5);
  for (int i = 0; i < val; ++i) {
    SurfaceAmalgam::Piece p{"y" + std::to_string(ny++), genus(), {root}};
    int kids = uniform(0, 2);
    std::vector<std::string> circles;
    for (int k = 0; k < kids; ++k) {
      auto c = "x" + std::to_string(nx++);
      x.type1.push_back(c);
      p.boundary.push_back(c);
      circles.push_back(c);
    }
    x.type2.push_back(p);
    for (const auto& cc : circles) {
      int v = uniform(3, 5);
      for (int m = 1; m < v; ++m) leaf(cc);
    }
  }
  return x;
}

Rational amalgam_chi_oracle(const SurfaceAmalgam& x) {
  Rational s = 0;
  for (const auto& p : x.type2) s += 2 - 2 * p.genus - static_cast<long long>(p.boundary.size());
  return s;
}

void c9(Criterion& c) {
  for (int t = 0; t < 100; ++t) {
    auto x = random_tree_amalgam();
    try {
      auto r = tree_to_racg(x);
      auto tag = "tree " + std::to_string(t);
      if (!validate(r.gamma).in_G_3convex) c.fail(tag + ": Γ not 3-convex in G");
      auto j = jsj_decomposition(r.gamma).to_bipartite();
      if (!find_isomorphism(x.graph(), j)) c.fail(tag + ": JSJ(Γ) not isomorphic to T");
      const auto chiX = amalgam_chi_oracle(x);
      if (amalgam_chi_oracle(r.lifted) != 8 * chiX) c.fail(tag + ": χ(X(H(T))) ≠ 8χ(X(T))");
      if (amalgam_chi_oracle(r.lifted) != 16 * chi_oracle(r.gamma)) c.fail(tag + ": χ(X(H(T))) ≠ 16χ(O)");
      if (r.chi_orbicomplex != chi_oracle(r.gamma)) c.fail(tag + ": χ(O) ≠ χ(W_Γ)");
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
  }
  SurfaceAmalgam star;
  star.type1 = {"c"};
  star.type2 = {{"u", 1, {"c"}}, {"v", 1, {"c"}}, {"w", 1, {"c"}}};
  auto r = tree_to_racg(star);
  auto t = recognize_gen_theta(r.gamma);
  if (!t || t->n != std::vector<int>{3, 3, 3}) c.fail("star of three S_{1,1} gives " + describe_graph(r.gamma));
}

// ------------------------------------------------------------------ 10

void c10(Criterion& c) {
  BipartiteGraph hex;
  for (int i = 0; i < 6; ++i) hex.add_vertex("a" + std::to_string(i), i % 2 == 0 ? 1 : 2);
  for (int i = 0; i < 6; ++i) {
    int u = i, v = (i + 1) % 6;
    if (u % 2) std::swap(u, v);
    hex.add_edge(u, v);
  }
  if (!tree_half_cover_targets(hex, 12).empty()) c.fail("alternating 6-cycle half-covers a tree");

  BipartiteGraph lam;
  for (int i = 1; i <= 3; ++i) lam.add_vertex("x" + std::to_string(i), 1);
  for (int i = 1; i <= 5; ++i) lam.add_vertex("y" + std::to_string(i), 2);
  auto e = [&](const std::string& a, const std::string& b) { lam.add_edge(lam.find(a), lam.find(b)); };
  for (auto y : {"y1", "y2", "y3"}) e("x1", y);
  for (auto y : {"y2", "y3", "y4"}) e("x2", y);
  for (auto y : {"y1", "y4", "y5"}) e("x3", y);
  BipartiteGraph lam2;
  lam2.add_vertex("x", 1);
  for (int i = 1; i <= 3; ++i) lam2.add_edge(0, lam2.add_vertex("z" + std::to_string(i), 2));
  if (common_half_cover_target(lam, lam2, 12)) c.fail("common half-cover target found");
}

// ------------------------------------------------------------------ 11

QVector random_qvector(int len) {
  QVector v(len);
  for (auto& x : v) x = Rational(uniform(-6, 6), uniform(1, 4));
  return v;
}

bool cross_oracle(const QVector& v, const QVector& w) {
  if (v.size() != w.size()) return false;
  bool vz = true, wz = true;
  for (const auto& x : v) vz = vz && x == 0;
  for (const auto& x : w) wz = wz && x == 0;
  if (vz != wz) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[i] * w[j] != v[j] * w[i]) return false;
  return true;
}

void c11(Criterion& c) {
  auto related = [](const QVector& base) {
    if (uniform(0, 2) == 0) return random_qvector(static_cast<int>(base.size()));
    Rational s(uniform(1, 5) * (uniform(0, 1) ? 1 : -1), uniform(1, 5));
    return scaled(base, s);
  };
  for (int t = 0; t < 10000; ++t) {
    int len = uniform(1, 4);
    auto a = random_qvector(len), b = related(a), d = related(b);
    if (!commensurable(a, a)) return c.fail("reflexivity");
    if (commensurable(a, b) != commensurable(b, a)) return c.fail("symmetry");
    if (commensurable(a, b) && commensurable(b, d) && !commensurable(a, d)) return c.fail("transitivity");
  }
  for (int t = 0; t < 10000; ++t) {
    int len = uniform(1, 4);
    auto a = random_qvector(len);
    auto b = uniform(0, 1) ? scaled(a, Rational(uniform(-4, 4), uniform(1, 3))) : random_qvector(uniform(0, 4) ? len : len + 1);
    if (commensurable(a, b) != cross_oracle(a, b)) return c.fail("disagrees with cross-product oracle on " + to_string(a) + ", " + to_string(b));
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, void (*)(Criterion&)>> all{
      {"euler vector of theta:2,2,3,4", c1},
      {"w-vector of the three-component example", c2},
      {"Γ1/Γ1' condition values", c3},
      {"Γ2/Γ2' condition values", c4},
      {"degree 16 cover on 100 random graphs", c5},
      {"Neumann feasibility, exhaustive", c6},
      {"positive-genus cover of S_{0,3}", c7},
      {"witness soundness on 200 commensurable pairs", c8},
      {"tree to RACG round trip on 100 trees", c9},
      {"half-cover nonexistence", c10},
      {"commensurability is an equivalence relation", c11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), all[i].first};
    auto start = std::chrono::steady_clock::now();
    try {
      all[i].second(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!c.pass) ++failures;
    std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << " [" << static_cast<int>(secs * 1000) << " ms]\n";
  }
  return failures;
}
