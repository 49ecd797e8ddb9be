#include <set>
#include "doctest.h"
#include "lie/branching.hpp"

using namespace lie;

TEST_CASE("restrict along the identity map is the identity") {
  auto a2 = RootDatum::parse("A2sc");
  auto chi = irrep_character(a2, {1, 1});
  auto id = identity_map(a2);
  CHECK(restrict_character(chi, id).mults == chi.mults);
  auto full = levi_map(a2, {0, 1});
  CHECK(restrict_character(chi, full).mults == chi.mults);
}

TEST_CASE("exterior cube of std6 branched to the (4,2) block Levi of SL6") {
  auto a5 = RootDatum::parse("A5sc");
  auto std6 = irrep_character(a5, {1, 0, 0, 0, 0});
  auto cube = exterior_power(std6, 3);
  REQUIRE(cube.dim() == 20);
  // Levi of type A3 + A1: simple roots 1,2,3 and 5 (0-based: 0,1,2 and 4)
  auto map = levi_map(a5, {0, 1, 2, 4});
  CHECK(map.source->type_label() == "A3+A1+T1");
  auto pieces = branch(cube, map);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0].dim == 12);  // Lambda^2 (x) std2
  CHECK(pieces[1].dim == 4);
  CHECK(pieces[2].dim == 4);
  i64 total = 0;
  for (auto& p : pieces) total += p.dim * p.multiplicity;
  CHECK(total == 20);
  // the two 4-dim pieces are dual to each other
  CHECK(map.source->dominant_rep(vneg(pieces[1].highest_weight)) == pieces[2].highest_weight);
}

TEST_CASE("the 56 of E7 branched to the A7 pseudo-Levi") {
  auto e7 = RootDatum::parse("E7sc");
  auto rho = irrep_character(e7, {0, 0, 0, 0, 0, 0, 1});
  TorsionPoint a7point;
  bool found = false;
  for (auto& p : enumerate_torsion(e7, 2))
    if (centralizer_subsystem(e7, p).type_label() == "A7") {
      a7point = p;
      found = true;
    }
  REQUIRE(found);
  auto map = pseudo_levi_map(e7, a7point);
  auto pieces = branch(rho, map);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].dim == 28);
  CHECK(pieces[1].dim == 28);
  CHECK(pieces[0].multiplicity == 1);
  CHECK(pieces[1].multiplicity == 1);
  // dual pair: the exterior square of the 8-dim representation and its dual
  CHECK(map.source->dominant_rep(vneg(pieces[0].highest_weight)) == pieces[1].highest_weight);
  // identification: pairing pattern of an exterior-square fundamental weight
  auto& src = *map.source;
  for (auto& piece : {pieces[0], pieces[1]}) {
    IVec pat;
    for (auto& cv : src.simple_coroots()) pat.push_back(dot(piece.highest_weight, cv));
    i64 ones = 0, idx = -1;
    for (size_t i = 0; i < pat.size(); ++i)
      if (pat[i] != 0) {
        ++ones;
        idx = static_cast<i64>(i);
        CHECK(pat[i] == 1);
      }
    CHECK(ones == 1);
    CHECK((idx == 1 || idx == 5));  // omega_2 or its mirror omega_6
  }
}

TEST_CASE("D6 Levi of E7 carries the similitude-spin lattice") {
  auto e7 = RootDatum::parse("E7sc");
  // Bourbaki nodes {2,3,4,5,6,7} are type D6 (0-based {1,2,3,4,5,6})
  auto map = levi_map(e7, {1, 2, 3, 4, 5, 6});
  CHECK(map.source->type_label() == "D6+T1");
  auto z = map.source->center();
  CHECK(z.free_rank == 1);
  CHECK(z.invariant_factors == std::vector<i64>{2});
  // both half-spin-type weights restrict from the 56
  auto rho = irrep_character(e7, {0, 0, 0, 0, 0, 0, 1});
  auto pieces = branch(rho, map);
  std::multiset<i64> dims;
  for (auto& p : pieces) dims.insert(p.dim);
  CHECK(dims == std::multiset<i64>{32, 12, 12});
}

TEST_CASE("pseudo-Levi at an order-2 point of the GSpin7 side") {
  auto d = RootDatum::parse("GSpin7xGL2~[1,1,1,2,1,1]");
  REQUIRE(d.type_label() == "B3+A1+T1");
  // find the order-2 class whose 7-dim standard part splits 3 + 4;
  // the vector representation's highest weight is the highest short root of
  // the B3 component: pairing pattern (1,0,0) there and 0 on the A1 part.
  IVec w7hw;
  for (auto& r : d.positive_roots()) {
    IVec pat;
    for (auto& cv : d.simple_coroots()) pat.push_back(dot(r, cv));
    if (pat == IVec{1, 0, 0, 0}) w7hw = r;
  }
  REQUIRE(!w7hw.empty());
  auto w7 = irrep_character(d, w7hw);
  CHECK(w7.dim() == 7);
  bool found = false;
  for (auto& p : enumerate_torsion(d, 2)) {
    RootDatum c = centralizer_subsystem(d, p);
    if (!is_elliptic(d, p)) continue;
    auto eig = eigenspace_decomposition(w7, p);
    if (eig.pieces.count(1) && eig.pieces.at(1).dim() == 4) {
      found = true;
      // centralizer of shape B1 + D2 + (untouched A1): all rank-1 pieces
      CHECK(c.type_label() == "A1+A1+A1+A1+T1");
      CHECK(eig.pieces.at(0).dim() == 3);
    }
  }
  CHECK(found);
}

TEST_CASE("branch commutes with duality and preserves dimension") {
  auto a5 = RootDatum::parse("A5sc");
  auto chi = irrep_character(a5, {1, 0, 1, 0, 0});
  auto map = levi_map(a5, {0, 1, 3});
  auto res = restrict_character(chi, map);
  CHECK(res.dim() == chi.dim());
  auto direct = branch(dual(chi), map);
  auto flipped = branch(chi, map);
  std::multiset<IVec> lhs, rhs;
  for (auto& p : direct) lhs.insert(p.highest_weight);
  for (auto& p : flipped) rhs.insert(map.source->dominant_rep(vneg(p.highest_weight)));
  CHECK(lhs == rhs);
  // reconstruction: sum of pieces equals the restriction
  std::map<IVec, i64> rebuilt;
  for (auto& p : flipped)
    for (auto& [w, m] : irrep_character(*map.source, p.highest_weight).mults)
      rebuilt[w] += p.multiplicity * m;
  CHECK(rebuilt == res.mults);
}

TEST_CASE("invalid Levi subsets are rejected") {
  auto a2 = RootDatum::parse("A2sc");
  CHECK_THROWS_AS(levi_map(a2, {5}), std::invalid_argument);
}
