#include <set>

#include "doctest.h"
#include "lie/rootdata.hpp"

using namespace lie;

namespace {

// Brute-force Weyl group order: closure of the simple reflections acting on X.
i64 brute_weyl_order(const RootDatum& d) {
  size_t n = d.rank();
  auto refl_matrix = [&](size_t i) {
    IMat m = identity_mat(n);
    for (size_t c = 0; c < n; ++c) {
      IVec e(n, 0);
      e[c] = 1;
      IVec img = vsub(e, vscale(dot(e, d.simple_coroots()[i]), d.simple_roots()[i]));
      for (size_t r = 0; r < n; ++r) m[r][c] = img[r];
    }
    return m;
  };
  std::vector<IMat> gens;
  for (size_t i = 0; i < d.simple_roots().size(); ++i) gens.push_back(refl_matrix(i));
  std::set<IMat> seen{identity_mat(n)};
  std::vector<IMat> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (auto& w : frontier)
      for (auto& g : gens) {
        IMat p = mat_mul(g, w);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return static_cast<i64>(seen.size());
}

}  // namespace

TEST_CASE("simple type root counts and Cartan pairings") {
  struct Row {
    const char* desc;
    size_t n_pos;
  };
  const Row rows[] = {
      {"A1sc", 1},  {"A2sc", 3},  {"A3ad", 6},  {"B2sc", 4},  {"B3sc", 9},
      {"C3sc", 9},  {"D4sc", 12}, {"D6sc", 30}, {"G2sc", 6},  {"F4sc", 24},
      {"E6sc", 36}, {"E7sc", 63}, {"B5sc", 25},
  };
  for (auto& r : rows) {
    CAPTURE(std::string(r.desc));
    RootDatum d = RootDatum::parse(r.desc);
    CHECK(d.positive_roots().size() == r.n_pos);
    CHECK(d.roots().size() == 2 * r.n_pos);
    for (size_t i = 0; i < d.roots().size(); ++i)
      CHECK(dot(d.roots()[i], d.coroots()[i]) == 2);
    // pairing matrix of the simple system equals the Cartan matrix of the label
    for (auto& comp : d.components()) {
      IMat c = cartan_matrix(comp.letter, comp.rank);
      for (int i = 0; i < comp.rank; ++i)
        for (int j = 0; j < comp.rank; ++j)
          CHECK(dot(d.simple_roots()[comp.simple_idx[j]],
                    d.simple_coroots()[comp.simple_idx[i]]) == c[i][j]);
    }
    // roots come in +/- pairs
    std::set<IVec> all(d.roots().begin(), d.roots().end());
    for (auto& r2 : d.roots()) CHECK(all.count(vneg(r2)) == 1);
  }
}

TEST_CASE("Weyl group orders: formula vs brute generation on rank <= 4") {
  for (const char* desc : {"A1sc", "A2ad", "A3sc", "A4sc", "B2sc", "B3ad", "B4sc", "C3sc",
                           "C4ad", "D4sc", "G2sc", "F4sc", "A1scxA1sc", "C3scxA1ad"}) {
    CAPTURE(std::string(desc));
    RootDatum d = RootDatum::parse(desc);
    CHECK(d.weyl_order() == brute_weyl_order(d));
  }
}

TEST_CASE("Weyl constants used by the verification suite") {
  CHECK(RootDatum::parse("F4sc").weyl_order() == 1152);
  CHECK(RootDatum::parse("C3scxA1sc").weyl_order() == 96);
  CHECK(RootDatum::parse("D4sc").weyl_order() == 192);
  CHECK(RootDatum::parse("F4scxA1scxA1scxA1sc").weyl_order() == 9216);
  CHECK(RootDatum::parse("C3scxA1scxA1scxA1scxA1sc").weyl_order() == 768);
  CHECK(RootDatum::parse("D4scxA1scxA1scxA1sc").weyl_order() == 1536);
}

TEST_CASE("fundamental groups have textbook orders") {
  CHECK(RootDatum::parse("A5sc").fundamental_group().order() == 6);
  CHECK(RootDatum::parse("A3sc").fundamental_group().order() == 4);
  CHECK(RootDatum::parse("B3sc").fundamental_group().order() == 2);
  CHECK(RootDatum::parse("C4sc").fundamental_group().order() == 2);
  CHECK(RootDatum::parse("D4sc").fundamental_group().order() == 4);
  CHECK(RootDatum::parse("D5sc").fundamental_group().order() == 4);
  CHECK(RootDatum::parse("E6sc").fundamental_group().order() == 3);
  CHECK(RootDatum::parse("E7sc").fundamental_group().order() == 2);
  CHECK(RootDatum::parse("E8sc").fundamental_group().order() == 1);
  CHECK(RootDatum::parse("F4sc").fundamental_group().order() == 1);
  CHECK(RootDatum::parse("G2sc").fundamental_group().order() == 1);
}

TEST_CASE("centers of constructed groups") {
  // E7 simply connected: center Z/2
  auto e7 = RootDatum::parse("E7sc");
  auto z = e7.center();
  CHECK(z.free_rank == 0);
  CHECK(z.invariant_factors == std::vector<i64>{2});

  // A1 simply connected: 2 roots, rank 1
  auto a1 = RootDatum::parse("A1sc");
  CHECK(a1.roots().size() == 2);
  CHECK(a1.rank() == 1);

  // Spin12 x SL2 / (Z/2): glue by any central order-2 element supported on
  // both factors; the quotient's center has order 4 of shape (Z/2)^2.
  auto prod = RootDatum::parse("D6scxA1sc");
  auto omega = prod.fundamental_group();
  QVec c;
  for (auto& g : omega.elements()) {
    bool d6part = false, a1part = false;
    for (size_t t = 0; t < 6; ++t)
      if (!g[t].is_zero()) d6part = true;
    if (!g[6].is_zero()) a1part = true;
    if (d6part && a1part) {
      c = g;
      break;
    }
  }
  REQUIRE(!c.empty());
  auto quo = prod.quotient_by_central(c);
  auto zq = quo.center();
  CHECK(zq.free_rank == 0);
  CHECK(zq.order() == 4);
  CHECK(zq.invariant_factors == std::vector<i64>{2, 2});
}

TEST_CASE("similitude lattices: GSpin constructions") {
  auto gspin7 = RootDatum::gspin(7);
  CHECK(gspin7.type_label() == "B3+T1");
  CHECK(gspin7.positive_roots().size() == 9);
  auto z7 = gspin7.center();
  CHECK(z7.free_rank == 1);
  CHECK(z7.invariant_factors.empty());  // GSpin odd: connected center GL1

  auto gspin8 = RootDatum::gspin(8);
  CHECK(gspin8.type_label() == "D4+T1");

  // (GSpin7 x GL2)^1: center GL1 x Z/2
  auto d = RootDatum::parse("GSpin7xGL2~[1,1,1,2,1,1]");
  CHECK(d.type_label() == "B3+A1+T1");
  auto z = d.center();
  CHECK(z.free_rank == 1);
  CHECK(z.invariant_factors == std::vector<i64>{2});
}

TEST_CASE("extended diagram and omega action") {
  auto e7 = RootDatum::parse("E7sc");
  auto ext = extended_diagram(e7);
  REQUIRE(ext.components.size() == 1);
  std::multiset<i64> marks(ext.components[0].marks.begin(), ext.components[0].marks.end());
  CHECK(marks == std::multiset<i64>{1, 1, 2, 2, 2, 3, 3, 4});
  REQUIRE(ext.omega_action.size() == 1);  // Z/2
  // the nontrivial element is a diagram involution moving the affine node
  auto& perm = ext.omega_action[0];
  CHECK(perm[0] != 0);
  std::set<int> image(perm.begin(), perm.end());
  CHECK(image.size() == perm.size());

  // adjoint datum: X = Q, the fundamental group still acts on the diagram
  auto a5 = RootDatum::parse("A5sc");
  auto ext5 = extended_diagram(a5);
  CHECK(a5.fundamental_group().order() == 6);
  REQUIRE(!ext5.omega_action.empty());
}

TEST_CASE("weyl orbit basics") {
  auto e7 = RootDatum::parse("E7sc");
  IVec zero(e7.rank(), 0);
  CHECK(e7.weyl_orbit(zero).size() == 1);

  auto d6 = RootDatum::parse("D6sc");
  IVec hs(d6.rank(), 0);
  hs[5] = 1;  // omega_6
  CHECK(d6.weyl_orbit(hs).size() == 32);

  CHECK_THROWS_AS(e7.weyl_orbit(IVec(3, 0)), std::invalid_argument);
}

TEST_CASE("degenerate and error paths") {
  CHECK_THROWS_AS(RootDatum::parse("Z9sc"), std::invalid_argument);
  auto a1 = RootDatum::parse("A1sc");
  // quotient by something not central
  QVec bad{Rat(1, 3)};
  CHECK_THROWS_AS(a1.quotient_by_central(bad), std::invalid_argument);
}

TEST_CASE("omega action structure on affine diagrams") {
  // affine A2: the fundamental group is Z/3 and a generator rotates the cycle
  auto a2 = RootDatum::parse("A2sc");
  auto ext = extended_diagram(a2);
  REQUIRE(ext.omega_action.size() == 1);
  auto& rot = ext.omega_action[0];
  REQUIRE(rot.size() == 3);
  CHECK(rot[0] != 0);
  // applying the permutation three times is the identity, twice is not
  auto apply = [&](std::vector<int> p) {
    std::vector<int> q(3);
    for (int i = 0; i < 3; ++i) q[i] = rot[p[i]];
    return q;
  };
  std::vector<int> id{0, 1, 2};
  auto once = apply(id);
  auto twice = apply(once);
  CHECK(apply(twice) == id);
  CHECK(twice != id);

  // E7: the generator is an involution on the affine nodes
  auto e7 = RootDatum::parse("E7sc");
  auto ext7 = extended_diagram(e7);
  auto& inv = ext7.omega_action[0];
  for (size_t i = 0; i < inv.size(); ++i) CHECK(inv[inv[i]] == static_cast<int>(i));
}

TEST_CASE("maximal Levi centers of E7: torsion parts match the glue data") {
  // each maximal Levi's dual is a product of special linear / spin factors
  // and a one-dimensional torus glued along a cyclic subgroup; the torsion of
  // X / Q_levi is the quotient of the product center by that glue
  auto e7 = RootDatum::parse("E7sc");
  struct Row {
    int deleted;  // 1-based Bourbaki node
    const char* type;
    std::vector<i64> torsion;
  };
  const Row rows[] = {
      {1, "D6+T1", {2}},       // (Z/2 x Z/2) / (Z/2)
      {2, "A6+T1", {}},        // Z/7 glued fully
      {3, "A5+A1+T1", {2}},    // (Z/6 x Z/2) / (Z/6)
      {4, "A3+A2+A1+T1", {2}}, // (Z/4 x Z/3 x Z/2) / (Z/12)
      {5, "A4+A2+T1", {}},     // (Z/5 x Z/3) / (Z/15)
      {6, "D5+A1+T1", {2}},    // (Z/4 x Z/2) / (Z/4)
      {7, "E6+T1", {}},        // Z/3 glued fully
  };
  for (auto& r : rows) {
    CAPTURE(r.deleted);
    std::vector<int> subset;
    for (int i = 0; i < 7; ++i)
      if (i != r.deleted - 1) subset.push_back(i);
    RootDatum levi = e7.levi(subset);
    CHECK(levi.type_label() == r.type);
    IMat roots;
    for (auto& rt : levi.roots()) roots.push_back(rt);
    SmithForm f = smith(roots);
    std::vector<i64> tors;
    for (size_t i = 0; i < f.rank; ++i)
      if (f.s[i][i] > 1) tors.push_back(f.s[i][i]);
    CHECK(tors == r.torsion);
  }
}
