// Registry of the verified models: dual root data with isogeny lattices, the
// defining representations, and per-model endoscopic case data (expected
// centralizer types, orders, eigenspace splittings, piece identifications,
// duality and symplectic flags, component-group character shapes).  The
// verifiers replay every structural claim and report pass/fail per item.
#pragma once

#include <memory>

#include "lie/branching.hpp"
#include "lie/endoscopy.hpp"
#include "lie/report.hpp"
#include "lie/signexpr.hpp"
#include "lie/torsion.hpp"

namespace lie {

struct ExpectedPiece {
  // Tensor factors as (component tag, role).  Tags look like "A3#0"; same-type
  // slots and the half-spin labelings are resolved by consistent assignment.
  // Roles: std, dual_std, ext2, dual_ext2, ext3, spin, hspin_a, hspin_b, vector.
  std::vector<std::pair<std::string, std::string>> factors;
  i64 dim = 0;
  bool self_dual = true;
  bool symplectic = true;  // meaningful when self_dual
  int dual_partner = -1;   // index of the partner piece when not self-dual
};

struct EndoscopicCase {
  std::string name;
  i64 ad_order = 1;     // enumeration level of the class
  i64 exact_order = 1;  // order of the lifted element
  std::string centralizer;
  int expected_count = 1;  // conjugacy classes matching the selector
  bool elliptic = true;
  std::map<i64, i64> eigen_dims;              // eigenvalue class -> dimension
  std::map<i64, std::vector<int>> class_pieces;  // class -> piece indices
  std::vector<ExpectedPiece> pieces;
  std::string omega_rule;  // canonical sign product (registry data)
  std::string eps_total;   // forced formal total sign; "" = unconstrained
  int epsilon_sprime = 0;  // recorded endoscopic sign-table entry; 0 = none
  std::string note;        // free-form recorded remark
  bool central = false;
  bool neutral = false;  // central and inside the neutral component of the center
  std::map<std::string, std::vector<i64>> aux_minus_dims;  // auxiliary char -> dims over matches
};

struct ModelSpec {
  std::string name;
  std::string dual_descriptor;
  std::shared_ptr<RootDatum> dual;
  std::vector<std::pair<std::string, IVec>> rho;  // constituents of the defining rep
  i64 total_dim = 0;
  std::map<std::string, IVec> aux_weights;  // named auxiliary characters (vector reps)
  std::vector<EndoscopicCase> cases;
  bool table_row = true;  // auxiliary models set this to false

  FormalCharacter rho_character() const;
};

// Resolve a dominant weight on d from its pairing pattern with the simple
// coroots; among integral solutions differing by central characters, prefers
// self-dual ones, then minimal coordinates.
IVec resolve_weight(const RootDatum& d, const IVec& pattern, bool prefer_self_dual = true);

const std::vector<ModelSpec>& builtin_models();
std::vector<ModelSpec> load_models_config(const std::string& path);

// Structural facts about the component-group character derived from an
// eigenspace decomposition: whether the -1 eigenspace is empty or everything
// (so the character value is forced to 1 resp. carries the full root-number
// symbol), and the formal total sign as a product over self-paired eigenvalue
// classes (dual-paired classes cancel).  Nothing numeric is ever produced.
struct OmegaStructure {
  bool minus_empty = false;
  bool minus_everything = false;
  SignExpr eps_total;
  std::string rule_shape;  // "no-minus-symbol", "eps(rhoX)", "one-minus-symbol"
};
OmegaStructure omega_structure_check(const EigenspaceDecomposition& eig, i64 total_dim);

ReportSection verify_model(const ModelSpec& spec);
ReportSection verify_lemma_2_2();
ReportSection verify_weyl_constants();
ReportSection verify_endoscopy_cancellation();

VerificationReport verify_all(const std::vector<std::string>& model_filter = {},
                              const std::vector<ModelSpec>& extra_models = {});

}  // namespace lie
