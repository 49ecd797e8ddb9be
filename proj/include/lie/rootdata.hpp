// Exact root data: character/cocharacter lattices with roots and coroots,
// constructors for simple types, products, central tori, similitude-style
// lattice quotients and central-subgroup quotients, Weyl groups, fundamental
// groups and extended (affine) diagrams.
//
// Conventions.  The character lattice X is Z^rank in a fixed basis; roots are
// vectors in X, coroots are covectors (elements of the dual basis).  The
// Cartan pairing is cartan(i,j) = <alpha_j, alpha_i-check>.  Simple roots are
// Bourbaki-numbered per component; components are concatenated in declaration
// order.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lie/linalg.hpp"

namespace lie {

struct FiniteAbelianGroup {
  std::vector<i64> invariant_factors;  // divisor chain, each >= 2
  i64 free_rank = 0;
  std::vector<QVec> generators;  // rational covectors, one per invariant factor
  i64 order() const {
    i64 o = 1;
    for (i64 d : invariant_factors) o = mul_ck(o, d);
    return o;
  }
  // All torsion elements as rational covectors (coset representatives).
  std::vector<QVec> elements() const;
};

struct Component {
  char letter = 'A';  // A B C D E F G
  int rank = 0;
  std::vector<int> simple_idx;  // positions into RootDatum::simples_, Bourbaki order
  IVec highest_root;
  IVec highest_coroot;
  std::vector<i64> marks;  // affine marks a_0=1, a_1..a_rank aligned with simple_idx
  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
};

class RootDatum {
 public:
  RootDatum() = default;

  size_t rank() const { return rank_; }
  const std::vector<IVec>& roots() const { return roots_; }
  const std::vector<IVec>& coroots() const { return coroots_; }
  size_t num_roots() const { return roots_.size(); }

  // Simple roots/coroots in canonical (Bourbaki, per component) order.
  const std::vector<IVec>& simple_roots() const { return simples_; }
  const std::vector<IVec>& simple_coroots() const { return simple_covs_; }
  size_t semisimple_rank() const { return simples_.size(); }
  size_t central_rank() const { return rank_ - components_rank_; }

  const std::vector<Component>& components() const { return comps_; }
  const std::string& type_label() const { return type_label_; }

  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  const std::vector<IVec>& positive_coroots() const { return pos_covs_; }
  const IVec& two_rho() const { return two_rho_; }       // sum of positive roots
  const IVec& two_rho_cov() const { return two_rho_cov_; }  // sum of positive coroots

  i64 pairing(const IVec& weight, const IVec& cov) const { return dot(weight, cov); }
  // W-invariant integral form B(x,y) = sum over positive coroots g of <x,g><y,g>.
  i64 bform(const IVec& x, const IVec& y) const;

  bool dominant(const IVec& w) const;
  IVec dominant_rep(IVec w) const;               // unique dominant W-orbit representative
  std::vector<IVec> weyl_orbit(const IVec& w) const;
  i64 weyl_order() const;                        // product-of-degrees formula
  IVec reflect(const IVec& w, size_t simple) const;
  QVec reflect_cov(const QVec& x, size_t simple) const;

  // Fundamental coweights (rational covectors in the coroot span):
  // <alpha_j, kappa_i> = delta_ij, kappa_i orthogonal to no root... spans Q-coroots.
  const std::vector<QVec>& fundamental_coweights() const { return fund_covs_; }
  // Fundamental weights (rational vectors in the root span).
  const std::vector<QVec>& fundamental_weights() const { return fund_wts_; }

  // Coordinates of v in the simple-root basis; nullopt if v is outside the
  // root span (nonzero central component).
  std::optional<QVec> simple_root_coords(const IVec& v) const;

  // Center of the group with this character lattice: structure of X / Q.
  FiniteAbelianGroup center() const;
  // P-check / Q-check of the underlying root system (pi_1 of the adjoint form).
  FiniteAbelianGroup fundamental_group() const;

  // Cocharacter sublattice of the derived group: X-check intersected with the
  // Q-span of the coroots (rows = basis).
  const IMat& derived_colattice() const { return derived_colattice_; }
  // Glue classes: derived_colattice modulo the coroot lattice.
  std::vector<QVec> glue_classes() const;

  // Constructors ------------------------------------------------------------
  static RootDatum simple(char letter, int rank, bool simply_connected);
  static RootDatum gl(int n);
  static RootDatum torus(int n);
  static RootDatum gsp(int n2);   // GSp_{2n}, n2 = 2n
  static RootDatum gso(int n2);   // split GSO_{2n}, n2 = 2n
  static RootDatum gspin(int n);  // dual datum of GSp_{n-1} (n odd) / GSO_n (n even)
  static RootDatum product(const std::vector<RootDatum>& parts);
  // Swap roots and coroots, X and X-check.
  RootDatum dual() const;
  // Characters of the kernel of the character v (a primitive vector in X):
  // X -> X / Zv.  v must pair to zero with every coroot.
  RootDatum quotient_lattice(const IVec& v) const;
  // Quotient of the group by the central subgroup generated by exp(2 pi i c):
  // X shrinks to { chi : <chi, c> in Z }.  c must pair integrally with roots.
  RootDatum quotient_by_central(const QVec& c) const;
  // Sub-datum on the same lattice spanned by the given subset of this datum's
  // simple roots (a Levi).
  RootDatum levi(const std::vector<int>& simple_subset) const;
  // Sub-datum on the same lattice with the given simple system (used for
  // pseudo-Levi centralizers); pairs must satisfy the root-datum axioms.
  static RootDatum on_lattice(size_t rank, std::vector<IVec> simple_roots,
                              std::vector<IVec> simple_coroots);

  // Parse a declarative shape descriptor, e.g.
  //   "E7sc", "A5ad", "C3scxA1sc", "GL4xGL2~[1,1,1,1,1,1]",
  //   "D6scxA1sc%[1/2,1/2,1/2,1/2,1/2,1/2,1/2]"
  // 'x' products, '~[ints]' lattice quotient by a primitive character,
  // '%[rationals]' quotient by the central element exp(2 pi i c).
  static RootDatum parse(const std::string& descriptor);
  const std::string& descriptor() const { return descriptor_; }

  bool same_lattice(const RootDatum& other) const { return rank_ == other.rank_; }

 private:
  void finish(const std::string& desc);  // closure, components, caches, checks

  size_t rank_ = 0;
  std::vector<IVec> roots_, coroots_;
  std::vector<IVec> simples_, simple_covs_;
  std::vector<Component> comps_;
  size_t components_rank_ = 0;
  std::string type_label_;
  std::string descriptor_;
  std::vector<IVec> pos_roots_, pos_covs_;
  IVec two_rho_, two_rho_cov_;
  std::vector<QVec> fund_covs_, fund_wts_;
  IMat derived_colattice_;
};

// Cartan matrix of a simple type, c[i][j] = <alpha_j, alpha_i-check>.
IMat cartan_matrix(char letter, int rank);

// Canonical label for a list of component labels plus central rank,
// e.g. "D6+A1" or "A3+A3+A1+T1".
std::string make_type_label(std::vector<std::string> comp_labels, size_t central_rank);

struct AffineNode {
  int node = 0;     // 0 = affine node, 1..rank = simple positions (per component)
  i64 mark = 1;
};

struct ExtendedDiagram {
  struct ComponentDiagram {
    std::string type;
    std::vector<i64> marks;                  // index 0 is the affine node
    std::vector<std::vector<int>> adjacency; // node -> neighbours
  };
  std::vector<ComponentDiagram> components;
  // Action of each fundamental-group generator as a permutation of the
  // affine nodes, concatenated per component blocks.
  std::vector<std::vector<int>> omega_action;
};

ExtendedDiagram extended_diagram(const RootDatum& d);

// Affine Weyl reduction of a rational coweight into the fundamental alcove.
QVec reduce_to_alcove(const RootDatum& d, QVec x);

}  // namespace lie
