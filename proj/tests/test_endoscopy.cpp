#include <set>

#include "doctest.h"
#include "lie/endoscopy.hpp"

using namespace lie;

namespace {

// Brute-force double sum over raw (un-quotiented) bit patterns with an
// independently written sign function.
i64 brute_cancellation(const StableClass& st, int eta) {
  std::vector<int> fpos1, fpos2;
  for (size_t i = 0; i < st.h1.size(); ++i)
    if (st.h1[i].is_field()) fpos1.push_back(static_cast<int>(i));
  for (size_t i = 0; i < st.h2.size(); ++i)
    if (st.h2[i].is_field()) fpos2.push_back(static_cast<int>(i));
  size_t nbits = fpos1.size() + fpos2.size();
  i64 worst = 0;
  for (auto& m : stable_matches(st)) {
    i64 sum = 0;
    for (size_t mask = 0; mask < (size_t(1) << nbits); ++mask) {
      std::vector<int> b1(st.h1.size(), 0), b2(st.h2.size(), 0);
      size_t b = 0;
      for (int i : fpos1) b1[i] = (mask >> b++) & 1;
      for (int i : fpos2) b2[i] = (mask >> b++) & 1;
      int par1 = 0, par2 = 0;
      for (int i : fpos1) par1 ^= b1[i];
      for (int i : fpos2) par2 ^= b2[i];
      if (par1 != par2) continue;
      int qs = (eta == 1) ? 0 : 1;
      int side = (par1 == qs) ? +1 : -1;  // quasi-split contributes +, inner forms -
      // sign: big factor over I^-, small factor everywhere
      int sgn = 1;
      std::vector<int> big_bits = b1;
      big_bits.insert(big_bits.end(), b2.begin(), b2.end());
      std::vector<ClassFactor> big = st.h1;
      big.insert(big.end(), st.h2.begin(), st.h2.end());
      for (int i : m.minus)
        if (big[i].is_field() && big_bits[i]) sgn = -sgn;
      for (size_t i = 0; i < st.h1.size(); ++i)
        if (st.h1[i].is_field() && b1[i]) sgn = -sgn;
      sum += side * sgn;
    }
    worst = std::max(worst, sum < 0 ? -sum : sum);
  }
  return worst;
}

}  // namespace

TEST_CASE("the generic unitary stable class: classes, matches, cancellation") {
  StableClass st = parse_stable_shape("E(a1),E(a2)|E(b1),E(b2)");
  auto matches = stable_matches(st);
  CHECK(matches.size() == 6);

  auto qs = rational_classes(st, Side::QuasiSplit, +1);
  auto in = rational_classes(st, Side::InnerForms, +1);
  REQUIRE(qs.size() == 2);
  REQUIRE(in.size() == 2);
  // quasi-split side at eta = +1: all-equal bits and the (0,0,1,1) pattern
  std::set<std::string> got{qs[0].str(), qs[1].str()};
  CHECK(got.count("[E(a1,0),E(a2,0) | E(b1,0),E(b2,0)]") == 1);
  CHECK(got.count("[E(a1,0),E(a2,0) | E(b1,1),E(b2,1)]") == 1);
  // the eta = -1 branch swaps the two lists
  auto qs_neg = rational_classes(st, Side::QuasiSplit, -1);
  std::set<std::string> swapped{qs_neg[0].str(), qs_neg[1].str()};
  std::set<std::string> inner_pos{in[0].str(), in[1].str()};
  CHECK(swapped == inner_pos);

  CHECK(verify_cancellation(st, +1) == 0);
  CHECK(verify_cancellation(st, -1) == 0);
}

TEST_CASE("transfer sign basics") {
  StableClass st = parse_stable_shape("E(a1),E(a2)|E(b1),E(b2)");
  auto matches = stable_matches(st);
  RationalClass zero;
  zero.h1 = st.h1;
  zero.h2 = st.h2;
  for (auto& m : matches) CHECK(transfer_sign(zero, m) == +1);

  // flipping one field-factor bit inside I^- flips the sign
  for (auto& m : matches) {
    if (m.minus.empty()) continue;
    RationalClass c = zero;
    int idx = m.minus[0];
    auto big_set = [&](RationalClass& r, int i, int bit) {
      if (i < static_cast<int>(r.h1.size()))
        r.h1[i].cbit = bit;
      else
        r.h2[i - r.h1.size()].cbit = bit;
    };
    big_set(c, idx, 1);
    int expect = (idx < static_cast<int>(st.h1.size())) ? +1 : -1;
    // a bit in the small-part copy (h1) contributes twice and cancels
    CHECK(transfer_sign(c, m) == expect);
  }

  // split factors contribute +1
  StableClass sp = parse_stable_shape("S(x),E(a)|E(b1),E(b2)");
  RationalClass c;
  c.h1 = sp.h1;
  c.h2 = sp.h2;
  EndoMatch m;
  m.minus = {0, 2};  // the split factor and one field factor
  CHECK(transfer_sign(c, m) == +1);
  c.h2[0].cbit = 1;
  CHECK(transfer_sign(c, m) == -1);
}

TEST_CASE("transfer sign is a character in the class bits") {
  StableClass st = parse_stable_shape("E(a1),E(a2)|E(b1),E(b2)");
  auto matches = stable_matches(st);
  auto with_bits = [&](unsigned mask) {
    RationalClass c;
    c.h1 = st.h1;
    c.h2 = st.h2;
    c.h1[0].cbit = mask & 1;
    c.h1[1].cbit = (mask >> 1) & 1;
    c.h2[0].cbit = (mask >> 2) & 1;
    c.h2[1].cbit = (mask >> 3) & 1;
    return c;
  };
  for (auto& m : matches)
    for (unsigned a = 0; a < 16; ++a)
      for (unsigned b = 0; b < 16; ++b)
        CHECK(transfer_sign(with_bits(a ^ b), m) ==
              transfer_sign(with_bits(a), m) * transfer_sign(with_bits(b), m));
}

TEST_CASE("matches collapse with repeated factors; single index is trivial") {
  StableClass rep = parse_stable_shape("E(a),E(a)|E(b),E(b)");
  CHECK(stable_matches(rep).size() == 3);  // contents aa|bb, ab|ab, bb|aa

  StableClass same = parse_stable_shape("E(a),E(a)|E(a),E(a)");
  CHECK(stable_matches(same).size() == 1);

  std::vector<ClassFactor> one{{FactorKind::FieldOther, 4, "x", 0}};
  auto two = stable_matches(one);
  REQUIRE(two.size() == 2);
  CHECK(two[0].minus.empty());
  CHECK(two[1].minus.size() == 1);
}

TEST_CASE("exhaustive cancellation sweep, both eta branches, |I| <= 4") {
  std::vector<std::string> h_shapes = {
      "E(a1),E(a2)", "E(a),E(a)", "Q(q1)",
  };
  // cross the two subgroup factors over shape choices and label collisions
  std::vector<std::string> stables;
  for (auto& f1 : h_shapes)
    for (auto& f2 : h_shapes) stables.push_back(f1 + "|" + f2);
  stables.push_back("E(a1),E(a2)|E(a1),E(a2)");
  stables.push_back("E(a1),E(a2)|E(a1),E(b)");
  stables.push_back("E(a),E(a)|E(a),E(b)");
  stables.push_back("Q(q)|Q(q)");
  stables.push_back("E(a1),E(a2)|Q(q)");
  stables.push_back("Q(q)|E(a1),E(a2)");
  for (auto& s : stables) {
    CAPTURE(s);
    StableClass st = parse_stable_shape(s);
    for (int eta : {+1, -1}) {
      CAPTURE(eta);
      CHECK(verify_cancellation(st, eta) == 0);
      CHECK(brute_cancellation(st, eta) == 0);
    }
  }
}

TEST_CASE("representative independence of the cancellation sums") {
  // recomputing with the opposite flip representative must not change sums
  StableClass st = parse_stable_shape("E(a1),E(a2)|E(b1),E(b2)");
  for (int eta : {+1, -1}) {
    auto qs = rational_classes(st, Side::QuasiSplit, eta);
    for (auto& m : stable_matches(st)) {
      i64 s1 = 0, s2 = 0;
      for (auto c : qs) {
        s1 += transfer_sign(c, m);
        for (auto& f : c.h1)
          if (f.flip_active()) f.cbit ^= 1;
        for (auto& f : c.h2)
          if (f.flip_active()) f.cbit ^= 1;
        s2 += transfer_sign(c, m);
      }
      CHECK(s1 == s2);
    }
  }
}

TEST_CASE("single-index stable class has one rational class per side pairing") {
  StableClass st = parse_stable_shape("Q(q1)|Q(q2)");
  auto qs = rational_classes(st, Side::QuasiSplit, +1);
  auto in = rational_classes(st, Side::InnerForms, +1);
  CHECK(qs.size() == 1);  // no flip-active factors: bits (0,0)
  CHECK(in.size() == 1);  // bits (1,1)
}

TEST_CASE("unsupported shapes are rejected") {
  CHECK_THROWS_AS(parse_stable_shape("E(a)|E(b1),E(b2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_stable_shape("no-bar"), std::invalid_argument);
  StableClass st = parse_stable_shape("E(a1),E(a2)|E(b1),E(b2)");
  CHECK_THROWS_AS(rational_classes(st, Side::QuasiSplit, 0), std::invalid_argument);
}

TEST_CASE("even orthogonal class doubling bookkeeping") {
  auto d = gso_class_doubling("t");
  CHECK(d.g_classes.size() == 2);
  CHECK(d.gp_classes.size() == 4);
  // each rational class corresponds to exactly two endoscopic stable classes
  for (auto& g : d.g_classes) {
    int n = 0;
    for (auto& [gp, via] : d.gp_classes)
      if (via == g) ++n;
    CHECK(n == 2);
  }
}
