#include "lie/branching.hpp"

#include <sstream>

namespace lie {

LatticeMap identity_map(const RootDatum& d) {
  LatticeMap m;
  m.source = std::make_shared<RootDatum>(d);
  m.target = &d;
  m.matrix = identity_mat(d.rank());
  return m;
}

LatticeMap levi_map(const RootDatum& d, const std::vector<int>& subset) {
  LatticeMap m;
  m.source = std::make_shared<RootDatum>(d.levi(subset));
  m.target = &d;
  m.matrix = identity_mat(d.rank());
  return m;
}

LatticeMap pseudo_levi_map(const RootDatum& d, const TorsionPoint& p) {
  LatticeMap m;
  m.source = std::make_shared<RootDatum>(centralizer_subsystem(d, p));
  m.target = &d;
  m.matrix = identity_mat(d.rank());
  return m;
}

FormalCharacter restrict_character(const FormalCharacter& chi, const LatticeMap& map) {
  if (chi.datum != map.target) throw std::invalid_argument("mismatched root data");
  FormalCharacter out;
  out.datum = map.source.get();
  for (auto& [w, m] : chi.mults) out.mults[mat_apply(map.matrix, w)] += m;
  return out;
}

std::vector<BranchPiece> branch(const FormalCharacter& chi, const LatticeMap& map) {
  FormalCharacter res = restrict_character(chi, map);
  std::vector<BranchPiece> out;
  for (auto& [hw, mult] : decompose(res)) {
    BranchPiece p;
    p.highest_weight = hw;
    p.multiplicity = mult;
    p.dim = dim_weyl(*map.source, hw);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const BranchPiece& a, const BranchPiece& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.highest_weight < b.highest_weight;
  });
  return out;
}

std::string branch_table(const std::vector<BranchPiece>& pieces, const RootDatum& source) {
  std::ostringstream os;
  for (auto& p : pieces) {
    os << "hw=(";
    for (size_t i = 0; i < p.highest_weight.size(); ++i)
      os << (i ? "," : "") << p.highest_weight[i];
    os << ") pair=(";
    for (size_t i = 0; i < source.simple_coroots().size(); ++i)
      os << (i ? "," : "") << dot(p.highest_weight, source.simple_coroots()[i]);
    // central weight: subtract the projection onto the span of the roots
    QVec central(source.rank(), Rat(0));
    for (size_t t = 0; t < source.rank(); ++t) central[t] = Rat(p.highest_weight[t]);
    for (size_t i = 0; i < source.simple_coroots().size(); ++i) {
      Rat pr = Rat(dot(p.highest_weight, source.simple_coroots()[i]));
      const QVec& omega = source.fundamental_weights()[i];
      for (size_t t = 0; t < source.rank(); ++t) central[t] -= pr * omega[t];
    }
    os << ") central=(";
    for (size_t t = 0; t < source.rank(); ++t) os << (t ? "," : "") << central[t].str();
    os << ") mult=" << p.multiplicity << " dim=" << p.dim << "\n";
  }
  return os.str();
}

}  // namespace lie
