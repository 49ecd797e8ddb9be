// Finite-order semisimple elements up to conjugacy: Kac coordinates on the
// affine diagram, enumeration by order, Borel-de Siebenthal centralizers,
// ellipticity, eigenspace decompositions of characters and component groups
// in adjoint quotients.
//
// A torsion point is a rational coweight x in the span of the coroots (the
// central-torus component is normalized away).  Its exact order is the least
// m with m x in the derived cocharacter lattice; its adjoint order is the
// least m with m x in the coweight lattice.  Conjugacy is alcove reduction
// plus identification under the glue group (derived colattice mod coroots).
#pragma once

#include <memory>

#include "lie/repchar.hpp"
#include "lie/rootdata.hpp"

namespace lie {

struct KacCoordinates {
  std::vector<std::vector<i64>> values;  // per component; index 0 = affine node
  QVec central;                          // rational central coordinates
  // per-component level m = sum a_i s_i
  std::vector<i64> levels(const RootDatum& d) const;
};

struct TorsionPoint {
  const RootDatum* datum = nullptr;
  QVec x;            // alcove-reduced rational coweight, zero central part
  i64 order = 1;     // exact order in the derived group
  i64 ad_order = 1;  // order of the adjoint image
};

// Normalize an arbitrary rational coweight: drop the central-torus component,
// reduce to the alcove, take the lexicographically least glue translate.
TorsionPoint make_torsion_point(const RootDatum& d, const QVec& x);

TorsionPoint kac_to_point(const RootDatum& d, const KacCoordinates& k);
KacCoordinates point_to_kac(const TorsionPoint& p);

// Conjugacy classes of elements whose adjoint order divides m: one
// representative per orbit of Kac coordinate tuples with sum a_i s_i | m
// under the glue identification.  Deterministic order.
std::vector<TorsionPoint> enumerate_torsion(const RootDatum& d, i64 m);

// Sub-root-datum on the same lattice: roots pairing integrally with x.  For
// an alcove point the simple system is the Borel-de Siebenthal subset of the
// extended simple roots.
RootDatum centralizer_subsystem(const RootDatum& d, const TorsionPoint& p);

bool is_elliptic(const RootDatum& d, const TorsionPoint& p);

struct EigenspaceDecomposition {
  std::shared_ptr<RootDatum> centralizer;
  std::map<i64, FormalCharacter> pieces;  // eigenvalue class k mod order
  i64 order = 1;
};

// Split a character by the eigenvalue classes of the torsion point; weight mu
// lands in class order * <mu, x> mod order.  A non-integral class signals a
// character that is not a representation of this isogeny form.
EigenspaceDecomposition eigenspace_decomposition(const FormalCharacter& chi,
                                                 const TorsionPoint& p);

// pi_0 of the centralizer in the adjoint group: the stabilizer in the
// fundamental group of the normalized Kac diagram.  Requires an
// adjoint-normalized datum.
FiniteAbelianGroup component_group_adjoint(const RootDatum& d, const TorsionPoint& p);

// Printable row per class: centralizer label, exact order, elliptic flag,
// Kac tuple.  Stable sort order.
std::string torsion_table(const RootDatum& d, i64 m);

}  // namespace lie
