#include "racgc/witness.hpp"

#include "racgc/errors.hpp"
#include "racgc/graph_io.hpp"
#include "racgc/jsj.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace racgc {

using nlohmann::json;

namespace {

Integer genus_for(const Integer& chi, const Integer& b) {
  Integer twice = 2 - b - chi;
  if (twice < 0 || twice % 2 != 0)
    throw InvariantFailure("no surface with euler characteristic " + chi.str() + " and " + b.str() + " boundary components");
  return twice / 2;
}

Integer integral(const Rational& r, const std::string& what) {
  if (!is_integer(r)) throw InvariantFailure(what + " is not an integer: " + to_string(r));
  return to_integer(r);
}

Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

void append(std::vector<std::string>& out, const std::string& prefix, const std::vector<std::string>& ps) {
  for (const auto& p : ps) out.push_back(prefix + p);
}

json surface_json(const Surface& s) {
  return {{"genus", integer_json(s.genus)}, {"boundary", integer_json(s.boundary)}};
}

json integers_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Θ-graphs

ThetaWitness witness_theta(const GeneralizedTheta& t, const GeneralizedTheta& t2) {
  auto d = classify_theta(t, t2);
  if (!d.commensurable) throw InvalidInput(t.shorthand() + " and " + t2.shorthand() + " are not commensurable");
  auto m = minimal_integral(theta_vector(t)), m2 = minimal_integral(theta_vector(t2));
  Rational q = m2.ratio / m.ratio;  // K/K'
  ThetaWitness w{t, t2, numerator(q), denominator(q), {}, {}};
  for (int n : t.n) w.sides.push_back(4 + w.K * (n - 1));
  for (int n : t2.n) w.sides_prime.push_back(4 + w.K_prime * (n - 1));
  std::sort(w.sides.begin(), w.sides.end());
  std::sort(w.sides_prime.begin(), w.sides_prime.end());
  auto bad = w.problems();
  if (!bad.empty()) throw InvariantFailure("theta witness: " + bad.front());
  return w;
}

std::vector<std::string> ThetaWitness::problems() const {
  std::vector<std::string> out;
  if (K < 1 || K_prime < 1) out.push_back("K and K' must be positive");
  auto v = theta_vector(left), v2 = theta_vector(right);
  if (scaled(v, Rational(K)) != scaled(v2, Rational(K_prime))) out.push_back("K·v ≠ K'·v'");
  if (sides != sides_prime) out.push_back("unfolded polygon multisets differ");
  for (const auto& s : sides)
    if (s < 5) out.push_back("unfolded polygon with fewer than five sides");
  return out;
}

// ---------------------------------------------------------------- covers

AmalgamCover make_amalgam_cover(const SurfaceAmalgam& cover, const SurfaceAmalgam& base,
                                const std::map<std::string, std::string>& image,
                                const std::map<std::string, Integer>& degree, const Integer& total) {
  AmalgamCover c{cover, base, {}, {}, {}, total};
  auto S = cover.graph(), T = base.graph();
  for (int v = 0; v < S.size(); ++v) {
    const auto& name = S.vertices[v].name;
    auto it = image.find(name);
    if (it == image.end()) throw InvariantFailure("cover vertex " + name + " has no image");
    int w = T.find(it->second);
    if (w < 0) throw InvariantFailure("image " + it->second + " is not in the base");
    c.vertex_map.push_back(w);
    c.degree.push_back(degree.at(name));
  }
  for (const auto& e : S.edges) {
    int x = c.vertex_map[e.x], y = c.vertex_map[e.y];
    int found = -1;
    for (std::size_t f = 0; f < T.edges.size() && found < 0; ++f)
      if (T.edges[f].x == x && T.edges[f].y == y) found = static_cast<int>(f);
    c.edge_map.push_back(found);
  }
  return c;
}

SurfaceAmalgam synthesize_X(const CycleData& c) {
  if (c.vectors.empty()) throw InvalidInput("cycle data without nontrivial components");
  SurfaceAmalgam x;
  const Integer n = static_cast<long long>(c.vectors.size());
  SurfaceAmalgam::Piece centre{"y0", 0, {}};
  for (std::size_t i = 0; i < c.vectors.size(); ++i) {
    auto p = "x" + std::to_string(i) + "+", m = "x" + std::to_string(i) + "-";
    x.type1.push_back(p);
    x.type1.push_back(m);
    centre.boundary.push_back(p);
    centre.boundary.push_back(m);
  }
  try {
    centre.genus = genus_for(integral(16 * c.chi_a, "16·χ(W_A)"), 2 * n);
    x.type2.push_back(centre);
    for (std::size_t i = 0; i < c.vectors.size(); ++i)
      for (std::size_t j = 0; j < c.vectors[i].size(); ++j)
        x.type2.push_back({"y" + std::to_string(i) + "_" + std::to_string(j),
                           genus_for(integral(16 * c.vectors[i][j], "16·χ"), 2),
                           {"x" + std::to_string(i) + "+", "x" + std::to_string(i) + "-"}});
  } catch (const InvariantFailure& e) {
    throw InvalidInput(std::string("cycle data does not come from a 3-convex cycle: ") + e.what());
  }
  auto bad = x.problems();
  if (!bad.empty()) throw InvalidInput("cycle data does not come from a 3-convex cycle: " + bad.front());
  return x;
}

// ---------------------------------------------------------------- condition (1)

namespace {

struct Slot {
  int p, vec;
  Integer i;
};

std::string xname(const std::string& side, int p, int vec, const Integer& i, char sign) {
  return "x" + side + "[" + std::to_string(p) + "," + std::to_string(vec) + "," + i.str() + "]" + sign;
}

std::string yname(const std::string& side, int p, int vec, const Integer& i, std::size_t j) {
  return "y" + side + "[" + std::to_string(p) + "," + std::to_string(vec) + "," + i.str() + "," +
         std::to_string(j) + "]";
}

// Y over X for one side. copies[p][q] = number of slots for vector q of class p.
void build_Y(const std::vector<Cond1Class>& classes, bool prime, const Rational& other_chi, const Integer& total,
             const Surface& T, const std::vector<std::vector<Surface>>& T_pj, SurfaceAmalgam& Y,
             std::map<std::string, std::string>& image, std::map<std::string, Integer>& degree) {
  const std::string side = prime ? "'" : "";
  SurfaceAmalgam::Piece centre{"y1" + side, T.genus, {}};
  std::vector<SurfaceAmalgam::Piece> rest;
  for (std::size_t p = 0; p < classes.size(); ++p) {
    const auto& cl = classes[p];
    const auto& qs = prime ? cl.q_prime : cl.q;
    const auto& ks = prime ? cl.k_prime : cl.k;
    const auto& ds = prime ? cl.d_prime : cl.d;
    for (std::size_t q = 0; q < qs.size(); ++q) {
      Integer copies = integral(abs_q(other_chi) * Rational(ks[q]), "slot count");
      const int vec = qs[q];
      for (Integer i = 1; i <= copies; ++i) {
        auto xp = xname(side, static_cast<int>(p), vec, i, '+');
        auto xm = xname(side, static_cast<int>(p), vec, i, '-');
        Y.type1.push_back(xp);
        Y.type1.push_back(xm);
        centre.boundary.push_back(xp);
        centre.boundary.push_back(xm);
        image[xp] = "x" + std::to_string(vec) + "+";
        image[xm] = "x" + std::to_string(vec) + "-";
        degree[xp] = degree[xm] = ds[q];
        for (std::size_t j = 0; j < static_cast<std::size_t>(cl.r); ++j) {
          auto y = yname(side, static_cast<int>(p), vec, i, j);
          rest.push_back({y, T_pj[p][j].genus, {xp, xm}});
          image[y] = "y" + std::to_string(vec) + "_" + std::to_string(j);
          degree[y] = ds[q];
        }
      }
    }
  }
  image[centre.id] = "y0";
  degree[centre.id] = total;
  Y.type2.push_back(centre);
  Y.type2.insert(Y.type2.end(), rest.begin(), rest.end());
}

}  // namespace

Cond1Witness witness_cycle_cond1(const CycleData& c, const CycleData& c2) {
  auto one = condition1(c, c2);
  if (!one.holds) throw InvalidInput("condition (1) does not hold");
  Cond1Witness w;
  w.data = c;
  w.data_prime = c2;
  const Rational chiA = abs_q(c.chi_a), chiA2 = abs_q(c2.chi_a);
  auto match = class_multiset_match(c.vectors, c2.vectors);
  w.K = 1;
  for (const auto& g : match.classes) {
    Cond1Class cl;
    cl.w = g.rep;
    cl.r = static_cast<int>(g.rep.size());
    cl.q = g.left;
    cl.q_prime = g.right;
    for (int i : g.left) cl.R.push_back(minimal_integral(c.vectors[i]).ratio);
    for (int k : g.right) cl.R_prime.push_back(minimal_integral(c2.vectors[k]).ratio);
    for (const auto& R : cl.R) cl.k.push_back(integral(16 * abs_q(R), "k_pq"));
    for (const auto& R : cl.R_prime) cl.k_prime.push_back(integral(16 * abs_q(R), "k'_pq'"));
    for (const auto& k : cl.k) w.K *= k;
    for (const auto& k : cl.k_prime) w.K *= k;
    Integer sk = std::accumulate(cl.k.begin(), cl.k.end(), Integer(0));
    Integer sk2 = std::accumulate(cl.k_prime.begin(), cl.k_prime.end(), Integer(0));
    cl.B = integral(chiA2 * Rational(sk), "B_p");
    if (Rational(cl.B) != chiA * Rational(sk2)) throw InvariantFailure("the two expressions for B_p disagree");
    w.classes.push_back(std::move(cl));
  }
  w.B = 0;
  for (auto& cl : w.classes) {
    for (const auto& k : cl.k) cl.d.push_back(w.K / k);
    for (const auto& k : cl.k_prime) cl.d_prime.push_back(w.K / k);
    w.B += cl.B;
  }
  w.D = integral(Rational(w.K) * chiA2, "D");
  w.D_prime = integral(Rational(w.K) * chiA, "D'");
  w.X = synthesize_X(c);
  w.X_prime = synthesize_X(c2);
  Integer chiT = integral(Rational(w.D) * 16 * c.chi_a, "χ(T)");
  w.T = Surface{genus_for(chiT, 2 * w.B), 2 * w.B};
  for (const auto& cl : w.classes) {
    std::vector<Surface> row;
    for (const auto& wj : cl.w) row.push_back(Surface{genus_for(-w.K * wj, 2), 2});
    w.T_pj.push_back(row);
  }
  std::map<std::string, std::string> im, im2;
  std::map<std::string, Integer> deg, deg2;
  build_Y(w.classes, false, c2.chi_a, w.D, w.T, w.T_pj, w.Y, im, deg);
  build_Y(w.classes, true, c.chi_a, w.D_prime, w.T, w.T_pj, w.Y_prime, im2, deg2);
  w.cover = make_amalgam_cover(w.Y, w.X, im, deg, w.D);
  w.cover_prime = make_amalgam_cover(w.Y_prime, w.X_prime, im2, deg2, w.D_prime);
  // Ψ and Ψ' are built slot by slot in the same order within each class
  if (w.Y.type1.size() != w.Y_prime.type1.size() || w.Y.type2.size() != w.Y_prime.type2.size())
    throw InvariantFailure("Ψ and Ψ' have different sizes");
  w.psi_iso.resize(w.Y.type1.size() + w.Y.type2.size());
  std::iota(w.psi_iso.begin(), w.psi_iso.end(), 0);
  auto bad = w.problems();
  if (!bad.empty()) throw InvariantFailure("condition (1) witness: " + bad.front());
  return w;
}

std::vector<std::string> Cond1Witness::problems() const {
  std::vector<std::string> out;
  Integer sumB = 0;
  for (const auto& cl : classes) {
    for (const auto& k : cl.k)
      if (k < 1 || k % 4 != 0) out.push_back("k_pq is not a positive multiple of 4");
    for (const auto& k : cl.k_prime)
      if (k < 1 || k % 4 != 0) out.push_back("k'_pq' is not a positive multiple of 4");
    if (cl.B < static_cast<long long>(cl.q.size()) || cl.B < static_cast<long long>(cl.q_prime.size()))
      out.push_back("B_p < max(N_p, N'_p)");
    Rational sR = 0, sR2 = 0;
    for (const auto& R : cl.R) sR += R;
    for (const auto& R : cl.R_prime) sR2 += R;
    if (data_prime.chi_a * sR != data.chi_a * sR2) out.push_back("χ(W_A')·ΣR ≠ χ(W_A)·ΣR'");
    for (std::size_t q = 0; q < cl.k.size(); ++q)
      if (cl.d[q] * cl.k[q] != K) out.push_back("d_pq·k_pq ≠ K");
    for (std::size_t q = 0; q < cl.k_prime.size(); ++q)
      if (cl.d_prime[q] * cl.k_prime[q] != K) out.push_back("d'_pq'·k'_pq' ≠ K");
    sumB += cl.B;
  }
  if (sumB != B) out.push_back("B ≠ ΣB_p");
  if (Rational(D) * data.chi_a != Rational(D_prime) * data_prime.chi_a) out.push_back("D·χ(S_𝒜) ≠ D'·χ(S_𝒜')");
  if (T.boundary != 2 * B) out.push_back("T needs 2B boundary components");
  // χ(T_p^j) = d_pq·χ(S_pq^j) for every q, and likewise on the primed side
  for (std::size_t p = 0; p < classes.size(); ++p) {
    const auto& cl = classes[p];
    for (int j = 0; j < cl.r; ++j) {
      for (std::size_t q = 0; q < cl.q.size(); ++q)
        if (Rational(T_pj[p][j].euler()) != Rational(cl.d[q]) * 16 * data.vectors[cl.q[q]][j])
          out.push_back("χ(T_p^j) ≠ d_pq·χ(S_pq^j)");
      for (std::size_t q = 0; q < cl.q_prime.size(); ++q)
        if (Rational(T_pj[p][j].euler()) != Rational(cl.d_prime[q]) * 16 * data_prime.vectors[cl.q_prime[q]][j])
          out.push_back("χ(T_p^j) ≠ d'_pq'·χ(S'_pq'^j)");
    }
  }
  append(out, "Y → X: ", amalgam_cover_violations(cover));
  append(out, "Y' → X': ", amalgam_cover_violations(cover_prime));
  if (cover.total != D || cover_prime.total != D_prime) out.push_back("cover degrees are not D and D'");
  auto G = Y.graph(), G2 = Y_prime.graph();
  if (!is_isomorphism(G, G2, psi_iso)) out.push_back("Ψ → Ψ' is not an isomorphism");
  else {
    const std::size_t n1 = Y.type1.size();
    for (std::size_t j = 0; j < Y.type2.size(); ++j)
      if (Y.surface(static_cast<int>(j)) != Y_prime.surface(static_cast<int>(psi_iso[n1 + j] - n1)))
        out.push_back("Y and Y' differ at surface " + Y.type2[j].id);
  }
  if (out.empty() && amalgam_euler(Y) != Rational(D) * amalgam_euler(X)) out.push_back("χ(Y) ≠ D·χ(X)");
  if (out.empty() && amalgam_euler(Y_prime) != Rational(D_prime) * amalgam_euler(X_prime))
    out.push_back("χ(Y') ≠ D'·χ(X')");
  return out;
}

// ---------------------------------------------------------------- condition (2)

namespace {

Cond2Side build_cond2_side(const CycleData& c, const ZVector& w0, const SurfaceAmalgam& W) {
  Cond2Side s;
  s.data = c;
  s.X = synthesize_X(c);
  s.u = minimal_integral(c.vectors.front()).rep;
  const auto& w = *c.w;
  s.k = static_cast<int>(std::find(w.begin(), w.end(), c.chi_a) - w.begin());
  if (s.k > static_cast<int>(w.size()) - 1) throw InvariantFailure("χ(W_A) is not an entry of w");
  ZVector w0hat;
  for (std::size_t i = 0; i < w0.size(); ++i)
    if (static_cast<int>(i) != s.k) w0hat.push_back(w0[i]);
  if (w0hat.size() != s.u.size()) throw InvariantFailure("ŵ₀ and u have different lengths");
  if (w0hat.front() % s.u.front() != 0) throw InvariantFailure("ŵ₀ is not an integral multiple of u");
  s.K = w0hat.front() / s.u.front();
  for (std::size_t i = 0; i < w0hat.size(); ++i)
    if (w0hat[i] != s.K * s.u[i]) throw InvariantFailure("ŵ₀ is not K·u");
  Rational ratio_w = minimal_integral(w).ratio;  // w = ratio·w₀
  if (minimal_integral(w).rep != w0) throw InvariantFailure("w is not in the class of w₀");
  s.M = integral(-8 * ratio_w, "M");
  s.D = s.M * s.K;
  for (const auto& v : c.vectors) s.d.push_back(integral(-8 * minimal_integral(v).ratio, "d_i"));
  // Z: same graph as X with every surface euler characteristic scaled by K
  s.Z = s.X;
  for (std::size_t j = 0; j < s.Z.type2.size(); ++j) {
    auto base = s.X.surface(static_cast<int>(j));
    s.Z.type2[j].genus = genus_for(s.K * base.euler(), base.boundary);
  }
  std::map<std::string, std::string> id, toW;
  std::map<std::string, Integer> degK, degW;
  for (const auto& x : s.Z.type1) {
    id[x] = x;
    degK[x] = s.K;
    int i = std::stoi(x.substr(1));
    toW[x] = std::string("x") + x.back();
    degW[x] = s.d[i];
  }
  auto wname = [](std::size_t pos) { return "w" + std::to_string(pos + 1); };
  for (const auto& p : s.Z.type2) {
    id[p.id] = p.id;
    degK[p.id] = s.K;
    if (p.id == "y0") {
      toW[p.id] = wname(s.k);
      degW[p.id] = s.D;
    } else {
      auto us = p.id.find('_');
      int i = std::stoi(p.id.substr(1, us - 1));
      std::size_t j = std::stoul(p.id.substr(us + 1));
      toW[p.id] = wname(static_cast<int>(j) < s.k ? j : j + 1);
      degW[p.id] = s.d[i];
    }
  }
  s.z_to_x = make_amalgam_cover(s.Z, s.X, id, degK, s.K);
  s.z_to_w = make_amalgam_cover(s.Z, W, toW, degW, s.D);
  return s;
}

std::vector<std::string> side_problems(const Cond2Side& s, const ZVector& w0, const SurfaceAmalgam& W) {
  std::vector<std::string> out;
  if (s.K < 1 || s.M < 1) out.push_back("K and M must be positive");
  Integer sum = std::accumulate(s.d.begin(), s.d.end(), Integer(0));
  if (sum != s.D) out.push_back("D ≠ Σd_i");
  if (s.D != s.M * s.K) out.push_back("D ≠ M·K");
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    QVector expect;
    for (const auto& x : s.u) expect.push_back(Rational(-2 * s.d[i] * x, 16));
    if (expect != s.data.vectors[i]) out.push_back("16·v_i ≠ d_i·(−2u)");
  }
  append(out, "Z → X: ", amalgam_cover_violations(s.z_to_x));
  append(out, "Z → W: ", amalgam_cover_violations(s.z_to_w));
  if (out.empty()) {
    if (amalgam_euler(s.Z) != Rational(s.K) * amalgam_euler(s.X)) out.push_back("χ(Z) ≠ K·χ(X)");
    if (amalgam_euler(s.Z) != Rational(s.D) * amalgam_euler(W)) out.push_back("χ(Z) ≠ D·χ(W)");
  }
  (void)w0;
  return out;
}

}  // namespace

Cond2Witness witness_cycle_cond2(const CycleData& c, const CycleData& c2) {
  auto two = condition2(c, c2);
  if (!two.holds) throw InvalidInput("condition (2) does not hold");
  Cond2Witness w;
  w.w0 = *two.w0;
  w.W.type1 = {"x+", "x-"};
  for (std::size_t i = 0; i < w.w0.size(); ++i) w.W.type2.push_back({"w" + std::to_string(i + 1), w.w0[i], {"x+", "x-"}});
  w.left = build_cond2_side(c, w.w0, w.W);
  w.right = build_cond2_side(c2, w.w0, w.W);
  auto bad = w.problems();
  if (!bad.empty()) throw InvariantFailure("condition (2) witness: " + bad.front());
  return w;
}

std::vector<std::string> Cond2Witness::problems() const {
  std::vector<std::string> out;
  for (const auto& p : W.problems()) out.push_back("W: " + p);
  for (std::size_t i = 0; i < w0.size(); ++i)
    if (W.surface(static_cast<int>(i)).euler() != -2 * w0[i]) out.push_back("χ(W_i) ≠ −2w_i");
  append(out, "left: ", side_problems(left, w0, W));
  append(out, "right: ", side_problems(right, w0, W));
  return out;
}

// ---------------------------------------------------------------- amalgams over trees

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

RacgConversion tree_to_racg(const SurfaceAmalgam& x) {
  x.validate();
  const auto G = x.graph();
  if (!G.is_tree()) throw InvalidInput("the JSJ graph of the amalgam is not a tree");
  RacgConversion r;
  r.input = x;
  r.positive = x;
  r.chi_input = amalgam_euler(x);
  bool zero = std::any_of(x.type2.begin(), x.type2.end(), [](const auto& p) { return p.genus == 0; });
  if (zero) {
    r.pos_genus_applied = true;
    std::map<std::string, std::string> id;
    std::map<std::string, Integer> deg;
    for (auto& p : r.positive.type2) {
      p.genus = pos_genus_cover(Surface{p.genus, static_cast<long long>(p.boundary.size())}).cover.genus;
      id[p.id] = p.id;
      deg[p.id] = 3;
    }
    for (const auto& c : x.type1) {
      id[c] = c;
      deg[c] = 3;
    }
    r.pos_genus = make_amalgam_cover(r.positive, x, id, deg, 3);
  }
  r.chi_positive = amalgam_euler(r.positive);

  // degree 8 lift to H(T)
  std::map<std::string, std::string> im;
  std::map<std::string, Integer> deg;
  for (const auto& c : r.positive.type1) {
    r.lifted.type1.push_back(c + "'");
    r.lifted.type1.push_back(c + "''");
    im[c + "'"] = im[c + "''"] = c;
    deg[c + "'"] = deg[c + "''"] = 4;
  }
  for (const auto& p : r.positive.type2) {
    const Integer b = static_cast<long long>(p.boundary.size());
    SurfaceAmalgam::Piece q{p.id, 3 * b + 8 * p.genus - 7, {}};
    for (const auto& c : p.boundary) {
      q.boundary.push_back(c + "'");
      q.boundary.push_back(c + "''");
    }
    r.lifted.type2.push_back(q);
    im[p.id] = p.id;
    deg[p.id] = 8;
  }
  r.lift = make_amalgam_cover(r.lifted, r.positive, im, deg, 8);
  r.chi_lifted = amalgam_euler(r.lifted);

  // defining graph
  UnionFind uf;
  std::map<std::string, std::pair<int, int>> poles;
  for (const auto& c : r.positive.type1) {
    int p = uf.make(), q = uf.make();
    poles[c] = {p, q};
  }
  struct Pending {
    int a, b;
    std::string prefix;
    Integer interior;
  };
  std::vector<Pending> pending;
  for (std::size_t j = 0; j < r.positive.type2.size(); ++j) {
    const auto& p = r.positive.type2[j];
    TreeVertexData v;
    v.id = p.id;
    v.b = static_cast<long long>(p.boundary.size());
    v.g = p.genus;
    v.g_prime = 3 * v.b + 8 * v.g - 7;
    v.terminal = v.b == 1;
    if (v.g_prime <= 0) throw InvariantFailure("g' is not positive at " + p.id);
    if (v.terminal) {
      if (v.g_prime % 2 != 0) throw InvariantFailure("g' is odd at terminal vertex " + p.id);
      v.polygon_sides = v.g_prime / 2 + 4;
      auto [a, b] = poles.at(p.boundary.front());
      pending.push_back({a, b, p.id, v.g_prime / 2 + 1});
    } else {
      v.h = v.g_prime - 3 * v.b + 3;
      if (v.h <= 0 || v.h % 2 != 0) throw InvariantFailure("h is not positive and even at " + p.id);
      v.s1 = Surface{3 * (v.b + 1) - 7, 2 * v.b + 2};
      v.s2 = Surface{v.h, 2};
      v.q_sides = 2 * (v.b + 1);
      v.p_sides = v.h / 2 + 4;
      if (v.s1.genus + v.s2.genus + 1 != v.g_prime) throw InvariantFailure("S1 ∪ S2 does not reassemble S_{y'}");
      auto nbrs = p.boundary;
      std::sort(nbrs.begin(), nbrs.end());
      std::vector<int> slot;
      for (std::size_t s = 0; s <= nbrs.size(); ++s) slot.push_back(uf.make());
      for (std::size_t s = 0; s < nbrs.size(); ++s) {
        uf.unite(slot[s], poles.at(nbrs[s]).first);
        uf.unite(slot[s + 1], poles.at(nbrs[s]).second);
      }
      pending.push_back({slot.back(), slot.front(), p.id + "t", v.h / 2 + 1});
    }
    r.vertices.push_back(v);
  }
  std::map<int, std::string> essential;
  std::vector<std::string> names;
  auto ess_name = [&](int node) {
    int root = uf.find(node);
    auto it = essential.find(root);
    if (it != essential.end()) return it->second;
    auto n = "a" + std::to_string(essential.size());
    essential[root] = n;
    names.push_back(n);
    return n;
  };
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& pb : pending) {
    auto prev = ess_name(pb.a);
    auto last = ess_name(pb.b);
    for (Integer m = 1; m <= pb.interior; ++m) {
      auto v = pb.prefix + "." + m.str();
      names.push_back(v);
      edges.emplace_back(prev, v);
      prev = v;
    }
    edges.emplace_back(prev, last);
  }
  r.gamma = Graph(names, edges);
  if (!validate(r.gamma).in_G_3convex) throw InvariantFailure("converted graph is not a 3-convex graph in G");
  r.cover = cover16(r.gamma);
  r.chi_orbicomplex = r.cover.orbicomplex.euler();
  auto iso = find_isomorphism(r.positive.graph(), r.cover.orbicomplex.jsj.to_bipartite());
  if (!iso) throw InvariantFailure("JSJ graph of the converted graph is not the input tree");
  r.jsj_iso = *iso;
  auto bad = r.problems();
  if (!bad.empty()) throw InvariantFailure("tree_to_racg: " + bad.front());
  return r;
}

std::vector<std::string> RacgConversion::problems() const {
  std::vector<std::string> out;
  if (pos_genus_applied) append(out, "positive-genus cover: ", amalgam_cover_violations(pos_genus));
  for (const auto& p : positive.type2)
    if (p.genus <= 0) out.push_back("surface " + p.id + " still has genus 0");
  append(out, "degree 8 cover: ", amalgam_cover_violations(lift));
  if (pos_genus_applied && chi_positive != 3 * chi_input) out.push_back("χ(X') ≠ 3·χ(X(T))");
  if (chi_lifted != 8 * chi_positive) out.push_back("χ(X(H(T))) ≠ 8·χ(X')");
  if (chi_lifted != 16 * chi_orbicomplex) out.push_back("χ(X(H(T))) ≠ 16·χ(𝒪)");
  if (chi_orbicomplex != euler_characteristic(gamma)) out.push_back("χ(𝒪) ≠ χ(W_Γ)");
  if (!is_isomorphism(positive.graph(), cover.orbicomplex.jsj.to_bipartite(), jsj_iso))
    out.push_back("JSJ graph of Γ is not isomorphic to T");
  if (!amalgam_homeomorphism(cover.amalgam, lifted)) out.push_back("cover16(Γ) is not homeomorphic to X(H(T))");
  append(out, "cover16: ", cover.problems());
  for (const auto& v : vertices) {
    if (v.g_prime != 3 * v.b + 8 * v.g - 7) out.push_back("g' ≠ 3b + 8g − 7 at " + v.id);
    if (v.terminal && v.g_prime % 2 != 0) out.push_back("odd g' at terminal " + v.id);
    if (!v.terminal && (v.h <= 0 || v.h % 2 != 0)) out.push_back("h not positive even at " + v.id);
  }
  return out;
}

// ---------------------------------------------------------------- bundles

json theta_witness_to_json(const ThetaWitness& w) {
  return {{"left", w.left.shorthand()},
          {"right", w.right.shorthand()},
          {"K", integer_json(w.K)},
          {"K_prime", integer_json(w.K_prime)},
          {"unfolded_sides", integers_json(w.sides)},
          {"unfolded_sides_prime", integers_json(w.sides_prime)},
          {"valid", w.problems().empty()}};
}

json cond1_witness_to_json(const Cond1Witness& w) {
  json cls = json::array();
  for (const auto& c : w.classes)
    cls.push_back({{"w", zvector_json(c.w)},
                   {"r", c.r},
                   {"q", c.q},
                   {"q_prime", c.q_prime},
                   {"R", rationals_json(c.R)},
                   {"R_prime", rationals_json(c.R_prime)},
                   {"k", integers_json(c.k)},
                   {"k_prime", integers_json(c.k_prime)},
                   {"d", integers_json(c.d)},
                   {"d_prime", integers_json(c.d_prime)},
                   {"B", integer_json(c.B)}});
  json tpj = json::array();
  for (const auto& row : w.T_pj) {
    json r = json::array();
    for (const auto& s : row) r.push_back(surface_json(s));
    tpj.push_back(r);
  }
  return {{"classes", cls},
          {"B", integer_json(w.B)},
          {"K", integer_json(w.K)},
          {"D", integer_json(w.D)},
          {"D_prime", integer_json(w.D_prime)},
          {"T", surface_json(w.T)},
          {"T_pj", tpj},
          {"X", amalgam_to_json(w.X)},
          {"X_prime", amalgam_to_json(w.X_prime)},
          {"Y_to_X", amalgam_cover_to_json(w.cover)},
          {"Y_prime_to_X_prime", amalgam_cover_to_json(w.cover_prime)},
          {"psi_isomorphism", w.psi_iso},
          {"valid", w.problems().empty()}};
}

static json cond2_side_json(const Cond2Side& s) {
  return {{"u", zvector_json(s.u)},
          {"K", integer_json(s.K)},
          {"M", integer_json(s.M)},
          {"D", integer_json(s.D)},
          {"d", integers_json(s.d)},
          {"k", s.k + 1},
          {"X", amalgam_to_json(s.X)},
          {"Z_to_X", amalgam_cover_to_json(s.z_to_x)},
          {"Z_to_W", amalgam_cover_to_json(s.z_to_w)}};
}

json cond2_witness_to_json(const Cond2Witness& w) {
  return {{"w0", zvector_json(w.w0)},
          {"W", amalgam_to_json(w.W)},
          {"left", cond2_side_json(w.left)},
          {"right", cond2_side_json(w.right)},
          {"valid", w.problems().empty()}};
}

json racg_conversion_to_json(const RacgConversion& r) {
  json vs = json::array();
  for (const auto& v : r.vertices) {
    json j{{"id", v.id},
           {"terminal", v.terminal},
           {"b", integer_json(v.b)},
           {"g", integer_json(v.g)},
           {"g_prime", integer_json(v.g_prime)}};
    if (v.terminal) {
      j["polygon_sides"] = integer_json(v.polygon_sides);
    } else {
      j["h"] = integer_json(v.h);
      j["S1"] = surface_json(v.s1);
      j["S2"] = surface_json(v.s2);
      j["Q_sides"] = integer_json(v.q_sides);
      j["P_sides"] = integer_json(v.p_sides);
    }
    vs.push_back(j);
  }
  json out{{"input", amalgam_to_json(r.input)},
           {"positive_genus_applied", r.pos_genus_applied},
           {"positive", amalgam_to_json(r.positive)},
           {"lifted", amalgam_to_json(r.lifted)},
           {"vertices", vs},
           {"graph", graph_to_json(r.gamma)},
           {"graph_shape", describe_graph(r.gamma)},
           {"euler",
            {{"input", to_string(r.chi_input)},
             {"positive", to_string(r.chi_positive)},
             {"lifted", to_string(r.chi_lifted)},
             {"orbicomplex", to_string(r.chi_orbicomplex)}}},
           {"valid", r.problems().empty()}};
  return out;
}

namespace {

json cycle_witnesses(const CycleData& c, const CycleData& c2, const std::string& route) {
  json out = json::object();
  if (route == "Cycle-cond1" || route == "Cycle-both") out["condition1"] = cond1_witness_to_json(witness_cycle_cond1(c, c2));
  if (route == "Cycle-cond2" || route == "Cycle-both") out["condition2"] = cond2_witness_to_json(witness_cycle_cond2(c, c2));
  return out;
}

bool all_valid(const json& j) {
  if (j.is_object()) {
    if (j.contains("valid") && j.at("valid") == false) return false;
    for (const auto& [k, v] : j.items())
      if (!all_valid(v)) return false;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (!all_valid(v)) return false;
  }
  return true;
}

json sealed(json j) {
  j["valid"] = all_valid(j);
  return j;
}

void check_X(const ThetaCycle& c) {
  auto cov = cover16(c.to_graph());
  if (!amalgam_homeomorphism(cov.amalgam, synthesize_X(cycle_data(c))))
    throw InvariantFailure("synthesized X differs from the degree 16 cover of " + c.shorthand());
}

}  // namespace

json witness_for_cycle_data(const CycleData& c, const CycleData& c2, const Decision& d) {
  if (!d.commensurable) throw InvalidInput("no witness for a negative verdict");
  return sealed(cycle_witnesses(c, c2, d.route));
}

json witness_for_graphs(const Graph& g, const Graph& g2, const Decision& d) {
  if (!d.commensurable) throw InvalidInput("no witness for a negative verdict");
  auto a = normalize(g), b = normalize(g2);
  json out{{"reductions", d.reductions}};
  if (a.is_theta() && b.is_theta()) {
    out["theta"] = theta_witness_to_json(witness_theta(a.theta(), b.theta()));
    return sealed(out);
  }
  ThetaCycle c1, c2;
  std::string route = d.route;
  if (a.is_theta() || b.is_theta()) {
    const auto& t = a.is_theta() ? a.theta() : b.theta();
    auto tc = theta_to_cycle(t);
    c1 = tc.cycle;
    c2 = a.is_theta() ? b.cycle() : a.cycle();
    route = d.evidence.at("cycle_route").get<std::string>();
    out["reduced"] = c1.shorthand();
    out["index"] = tc.index;
  } else {
    c1 = a.cycle();
    c2 = b.cycle();
  }
  check_X(c1);
  check_X(c2);
  out["cycle"] = cycle_witnesses(cycle_data(c1), cycle_data(c2), route);
  return sealed(out);
}

}  // namespace racgc
