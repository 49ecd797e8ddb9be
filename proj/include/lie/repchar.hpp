// Formal characters of finite-dimensional representations: construction from
// a highest weight (Freudenthal recursion), dimensions via the Weyl formula,
// tensor products, exterior powers through Adams operations, duals,
// decomposition into irreducibles, and Frobenius-Schur indicators.
#pragma once

#include <map>
#include <vector>

#include "lie/rootdata.hpp"

namespace lie {

struct NotACharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormalCharacter {
  const RootDatum* datum = nullptr;
  std::map<IVec, i64> mults;  // weight -> multiplicity

  i64 dim() const {
    i64 s = 0;
    for (auto& [w, m] : mults) s = add_ck(s, m);
    return s;
  }
  bool operator==(const FormalCharacter& o) const {
    return datum == o.datum && mults == o.mults;
  }
  // sorted "(w1,...,wn):m" lines, for golden tests and the CLI
  std::string serialize() const;
};

// Irreducible character with highest weight lambda (must be dominant).
FormalCharacter irrep_character(const RootDatum& d, const IVec& lambda);

// Dimension by the Weyl formula; exact, via factored products.
i64 dim_weyl(const RootDatum& d, const IVec& lambda);

// Multiplicity table of the irreducible: dominant weight -> multiplicity.
// The parallel kernel fans the recursion's root sums out across threads; the
// serial variant is the reference implementation kept for testing.
std::map<IVec, i64> dominant_weight_multiplicities(const RootDatum& d, const IVec& lambda);
std::map<IVec, i64> dominant_weight_multiplicities_serial(const RootDatum& d,
                                                          const IVec& lambda);

FormalCharacter trivial_character(const RootDatum& d);
FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter tensor_serial(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter exterior_power(const FormalCharacter& chi, i64 k);
FormalCharacter dual(const FormalCharacter& chi);

// Decompose a genuine character into (highest weight, multiplicity) pairs,
// largest weight first.  Throws NotACharacter if subtraction fails.
std::vector<std::pair<IVec, i64>> decompose(const FormalCharacter& chi);

// Frobenius-Schur indicator of the irreducible V(lambda):
//   0 not self-dual, +1 orthogonal, -1 symplectic.
int fs_indicator(const RootDatum& d, const IVec& lambda);

// Extended symplectic-type test for a sum of irreducibles: every self-dual
// constituent symplectic, all others paired with their duals.
bool symplectic_type(const RootDatum& d, const std::vector<std::pair<IVec, i64>>& constituents);

}  // namespace lie
