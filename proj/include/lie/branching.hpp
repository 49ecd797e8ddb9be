// Restriction of characters along lattice maps to Levi subgroups,
// pseudo-Levi centralizers, and declared subgroup embeddings; decomposition
// into subgroup irreducibles.
#pragma once

#include <memory>

#include "lie/repchar.hpp"
#include "lie/torsion.hpp"

namespace lie {

struct LatticeMap {
  std::shared_ptr<RootDatum> source;  // subgroup
  const RootDatum* target = nullptr;  // ambient
  IMat matrix;                        // target weight coords -> source weight coords
};

LatticeMap identity_map(const RootDatum& d);
LatticeMap levi_map(const RootDatum& d, const std::vector<int>& simple_subset);
LatticeMap pseudo_levi_map(const RootDatum& d, const TorsionPoint& p);

// Weight pushforward along the map.
FormalCharacter restrict_character(const FormalCharacter& chi, const LatticeMap& map);

struct BranchPiece {
  IVec highest_weight;  // in source coordinates
  i64 multiplicity = 0;
  i64 dim = 0;
};

// decompose(restrict(chi)); dims are conserved.
std::vector<BranchPiece> branch(const FormalCharacter& chi, const LatticeMap& map);

// Sorted (source highest weight, pairing vector, multiplicity, dim) rows.
std::string branch_table(const std::vector<BranchPiece>& pieces, const RootDatum& source);

}  // namespace lie
