// Semisimple conjugacy-class data for similitude classical groups at the
// granularity the sign combinatorics needs: a local field is never modeled
// analytically, a quadratic extension is a tag with a Z/2 norm-class group.
// Covers stable-vs-rational class bookkeeping, endoscopic matching, relative
// transfer-factor signs and the cancellation identity for the unitary model.
#pragma once

#include <string>
#include <vector>

#include "lie/numeric.hpp"

namespace lie {

enum class FactorKind {
  SplitPair,   // F + F over F: trivial norm character, no class bit
  FieldE,      // the distinguished quadratic field E over a degree-d_i base
  FieldOther,  // a different quadratic extension tower
};

struct ClassFactor {
  FactorKind kind = FactorKind::FieldE;
  int degree = 1;     // relative degree d_i of the base over F
  std::string label;  // opaque eigenvalue label x_i
  int cbit = 0;       // norm-class bit, meaningful for field factors

  bool flip_active() const { return kind == FactorKind::FieldE && degree == 1; }
  bool is_field() const { return kind != FactorKind::SplitPair; }
};

// A stable class of the product model: two factor lists of total degree 2
// (one per factor of the subgroup), class bits unset.  Viewed inside the big
// group, the large factor carries h1 followed by h2 and the small factor
// repeats h1.
struct StableClass {
  std::vector<ClassFactor> h1, h2;
  std::vector<ClassFactor> gu4() const;
  i64 total_degree() const;
};

// A rational class: the same shape with class bits assigned, canonicalized
// under the diagonal flip (first flip-active factor has bit 0).
struct RationalClass {
  std::vector<ClassFactor> h1, h2;
  std::vector<ClassFactor> gu4() const;
  std::string str() const;
};

enum class Side { QuasiSplit, InnerForms };

// Rational classes inside the stable class routed to the quasi-split side or
// to the definite inner forms, per the eta_{E/F}(-1) branch.  Only classes
// with matching form types on the two factors enter (the mixed ones pair off
// against the mixed inner forms and cancel separately).
std::vector<RationalClass> rational_classes(const StableClass& stable, Side side,
                                            int eta_minus_one);

struct EndoMatch {
  std::vector<int> minus;       // indices into gu4() lying in I^-
  std::string gprime_label;     // description of the matched stable class
  int quaternion_sign = +1;     // per-match constant flag, never derived here
};

// Stable classes of the endoscopic group matched to this stable class:
// degree-balanced partitions of the large-factor index set, identified when
// repeated labels collapse them; if no balanced partition exists the trivial
// partitions (I^- empty / full) are returned.
std::vector<EndoMatch> stable_matches(const StableClass& stable);
std::vector<EndoMatch> stable_matches(const std::vector<ClassFactor>& gu4_factors);

// Relative transfer-factor sign: product of (-1)^{c_i} over field factors of
// the large part in I^- and over the small part (which the endoscopic element
// scales by -1 throughout); split factors contribute +1; the all-zero-bit
// class has sign +1 by normalization.
int transfer_sign(const RationalClass& c, const EndoMatch& m);

// For each match, sum of transfer signs over the quasi-split-side classes
// minus the sum over the inner-form-side classes; returns the maximum
// absolute discrepancy over all matches (0 on pass).
i64 verify_cancellation(const StableClass& stable, int eta_minus_one);

// Parse a compact shape string "E(a),E(b)|Q(c)": factor lists for the two
// subgroup factors separated by '|'; E(x) is a relative-degree-1 factor over
// the distinguished field, Q(x) a degree-2 other-field factor, S(x) a split
// degree-1 factor.
StableClass parse_stable_shape(const std::string& s);

// Even special orthogonal bookkeeping: each class datum determines two
// rational classes differed by the outer automorphism, and four stable
// classes of the endoscopic group, two per rational class.
struct GsoDoubling {
  std::vector<std::string> g_classes;                          // 2 labels
  std::vector<std::pair<std::string, std::string>> gp_classes; // 4, tagged with their g class
};
GsoDoubling gso_class_doubling(const std::string& datum_label);

}  // namespace lie
