#include "lie/models.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lie/parallel.hpp"

namespace lie {

namespace {

std::string dimmap_str(const std::map<i64, i64>& m) {
  std::string s = "{";
  for (auto& [k, v] : m) s += std::to_string(k) + ":" + std::to_string(v) + " ";
  if (s.size() > 1) s.pop_back();
  return s + "}";
}

// ---------------------------------------------------------------------------
// weight resolution

IMat central_char_lattice(const RootDatum& d) {
  // characters vanishing on the derived group: {v in X : <v, coroot> = 0}
  IMat rows;
  for (auto& cv : d.positive_coroots()) rows.push_back(cv);
  if (rows.empty()) return identity_mat(d.rank());
  return int_kernel(rows, d.rank());
}

IMat central_colattice(const RootDatum& d) {
  IMat rows;
  for (auto& r : d.positive_roots()) rows.push_back(r);
  if (rows.empty()) return identity_mat(d.rank());
  return int_kernel(rows, d.rank());
}

// is x in span_Q(central cocharacters) + Z^n, i.e. does exp(2 pi i x) lie in
// the neutral component of the center?
bool in_neutral_center(const RootDatum& d, const QVec& x) {
  IMat zc = central_colattice(d);
  size_t n = d.rank();
  if (zc.empty()) {
    for (auto& q : x)
      if (!q.is_integer()) return false;
    return true;
  }
  SmithForm f = smith(zc);
  // x = y V^{-1}; x in span(first-rank rows of V^{-1}) + Z^n  iff  the trailing
  // coordinates of y = x V are integral
  for (size_t j = f.rank; j < n; ++j) {
    Rat yj;
    for (size_t i = 0; i < n; ++i) yj += x[i] * Rat(f.v[i][j]);
    if (!yj.is_integer()) return false;
  }
  return true;
}

}  // namespace

IVec resolve_weight(const RootDatum& d, const IVec& pattern, bool prefer_self_dual) {
  size_t m = d.simple_coroots().size();
  if (pattern.size() != m) throw std::invalid_argument("vector of wrong length");
  // integral solutions of <w, alpha_i-check> = pattern_i
  IMat a(m, IVec(d.rank()));
  for (size_t i = 0; i < m; ++i) a[i] = d.simple_coroots()[i];
  SmithForm f = smith(a);
  IVec ub = mat_apply(f.u, pattern);
  IVec z(d.rank(), 0);
  for (size_t i = 0; i < d.rank(); ++i) {
    if (i < f.rank) {
      if (ub[i] % f.s[i][i] != 0)
        throw std::invalid_argument("pattern has no integral weight solution");
      z[i] = ub[i] / f.s[i][i];
    } else if (i < m && ub[i] != 0) {
      throw std::invalid_argument("pattern has no integral weight solution");
    }
  }
  IVec w0(d.rank(), 0);
  for (size_t i = 0; i < d.rank(); ++i)
    for (size_t j = 0; j < d.rank(); ++j) w0[i] = add_ck(w0[i], mul_ck(f.v[i][j], z[j]));

  IMat central = central_char_lattice(d);
  auto norm1 = [](const IVec& v) {
    i64 s = 0;
    for (i64 x : v) s += std::abs(x);
    return s;
  };
  IVec best;
  bool best_sd = false;
  std::function<void(size_t, IVec)> scan = [&](size_t i, IVec w) {
    if (i == central.size()) {
      bool sd = d.dominant_rep(vneg(w)) == w;
      auto better = [&] {
        if (best.empty()) return true;
        if (prefer_self_dual && sd != best_sd) return sd;
        i64 a1 = norm1(w), b1 = norm1(best);
        if (a1 != b1) return a1 < b1;
        return w < best;
      };
      if (better()) {
        best = w;
        best_sd = sd;
      }
      return;
    }
    for (i64 c = -3; c <= 3; ++c) scan(i + 1, vadd(w, vscale(c, central[i])));
  };
  scan(0, w0);
  return best;
}

FormalCharacter ModelSpec::rho_character() const {
  FormalCharacter total;
  total.datum = dual.get();
  for (auto& [label, hw] : rho) {
    (void)label;
    for (auto& [w, m] : irrep_character(*dual, hw).mults) total.mults[w] += m;
  }
  return total;
}

// ---------------------------------------------------------------------------
// expected-piece matching

namespace {

struct Assignment {
  // component tag -> component index in the centralizer datum
  std::map<std::string, int> comp_of_tag;
  // per component index: role-node table overrides (for hspin/flip choices)
  std::map<int, bool> a_flip;                       // A components: reverse chain
  std::map<int, std::pair<int, int>> hspin_nodes;   // D components: (a, b) node pos
};

int role_node(const Component& comp, const std::string& role, const Assignment& asg,
              int comp_index) {
  int k = comp.rank;
  bool flip = false;
  if (auto it = asg.a_flip.find(comp_index); it != asg.a_flip.end()) flip = it->second;
  auto a_node = [&](int pos) { return flip ? k - 1 - pos : pos; };
  if (comp.letter == 'A') {
    if (role == "std") return a_node(0);
    if (role == "dual_std") return a_node(k - 1);
    if (role == "ext2") return a_node(1);
    if (role == "dual_ext2") return a_node(k - 2);
    if (role == "ext3") return a_node(2);
    if (role == "hspin_a") return a_node(0);   // D3 = A3 half-spins
    if (role == "hspin_b") return a_node(k - 1);
    if (role == "vector" && k == 3) return 1;  // D3 vector
  } else if (comp.letter == 'B') {
    if (role == "spin") return k - 1;
    if (role == "std" || role == "vector") return 0;
  } else if (comp.letter == 'D') {
    auto hs = asg.hspin_nodes.count(comp_index) ? asg.hspin_nodes.at(comp_index)
                                                : std::make_pair(k - 2, k - 1);
    if (role == "hspin_a") return hs.first;
    if (role == "hspin_b") return hs.second;
    if (role == "std" || role == "vector") return 0;
  } else if (comp.letter == 'E' && role == "omega7") {
    return 6;
  }
  throw std::invalid_argument("unresolvable role " + role + " on " + comp.label());
}

// pairing pattern of an expected piece over all simple coroots of cent
IVec expected_pattern(const RootDatum& cent, const ExpectedPiece& piece,
                      const Assignment& asg) {
  IVec pat(cent.semisimple_rank(), 0);
  for (auto& [tag, role] : piece.factors) {
    int ci = asg.comp_of_tag.at(tag);
    const Component& comp = cent.components()[ci];
    int node = role_node(comp, role, asg, ci);
    pat[comp.simple_idx[node]] += 1;
  }
  return pat;
}

IVec actual_pattern(const RootDatum& cent, const IVec& hw) {
  IVec pat;
  for (auto& cv : cent.simple_coroots()) pat.push_back(dot(hw, cv));
  return pat;
}

// enumerate all assignments consistent with the tags used by the case
std::vector<Assignment> enumerate_assignments(const RootDatum& cent,
                                              const EndoscopicCase& cs) {
  std::set<std::string> tags;
  for (auto& piece : cs.pieces)
    for (auto& [tag, role] : piece.factors) {
      (void)role;
      tags.insert(tag);
    }
  // group tags and components by type label
  std::map<std::string, std::vector<std::string>> tags_by_type;
  for (auto& t : tags) tags_by_type[t.substr(0, t.find('#'))].push_back(t);
  std::map<std::string, std::vector<int>> comps_by_type;
  for (size_t i = 0; i < cent.components().size(); ++i)
    comps_by_type[cent.components()[i].label()].push_back(static_cast<int>(i));

  std::vector<Assignment> out;
  Assignment base;
  std::function<void(std::map<std::string, std::vector<std::string>>::iterator)> assign =
      [&](auto it) {
        if (it == tags_by_type.end()) {
          // expand orientation choices over the used components
          std::vector<int> used;
          for (auto& [t, c] : base.comp_of_tag) {
            (void)t;
            used.push_back(c);
          }
          std::sort(used.begin(), used.end());
          used.erase(std::unique(used.begin(), used.end()), used.end());
          std::vector<Assignment> partial{base};
          for (int ci : used) {
            const Component& comp = cent.components()[ci];
            std::vector<Assignment> next;
            for (auto& a : partial) {
              if (comp.letter == 'A' && comp.rank >= 2) {
                for (bool fl : {false, true}) {
                  Assignment b = a;
                  b.a_flip[ci] = fl;
                  next.push_back(b);
                }
              } else if (comp.letter == 'D') {
                std::vector<std::pair<int, int>> opts;
                if (comp.rank == 4) {
                  const int nodes[3] = {0, 2, 3};  // the three 8-dim nodes
                  for (int x : nodes)
                    for (int y : nodes)
                      if (x != y) opts.push_back({x, y});
                } else {
                  opts = {{comp.rank - 2, comp.rank - 1}, {comp.rank - 1, comp.rank - 2}};
                }
                for (auto& o : opts) {
                  Assignment b = a;
                  b.hspin_nodes[ci] = o;
                  next.push_back(b);
                }
              } else {
                next.push_back(a);
              }
            }
            partial = std::move(next);
          }
          out.insert(out.end(), partial.begin(), partial.end());
          return;
        }
        auto& [type, tag_list] = *it;
        auto avail = comps_by_type.count(type) ? comps_by_type[type] : std::vector<int>{};
        if (avail.size() < tag_list.size()) return;  // impossible
        std::vector<int> perm = avail;
        std::sort(perm.begin(), perm.end());
        do {
          auto saved = base.comp_of_tag;
          for (size_t i = 0; i < tag_list.size(); ++i) base.comp_of_tag[tag_list[i]] = perm[i];
          assign(std::next(it));
          base.comp_of_tag = saved;
        } while (std::next_permutation(perm.begin(), perm.end()));
      };
  assign(tags_by_type.begin());
  return out;
}

struct MatchedClass {
  TorsionPoint point;
  EigenspaceDecomposition eig;
  int orientation = +1;  // +1: classes as stated; -1: classes negated
};

i64 flip_key(i64 k, i64 m, int orientation) {
  return orientation == 1 ? k : ((m - k) % m);
}

// decomposed pieces per eigenvalue class, with the case's class orientation
std::map<i64, std::vector<std::pair<IVec, i64>>> class_decompositions(
    const MatchedClass& mc) {
  std::map<i64, std::vector<std::pair<IVec, i64>>> out;
  for (auto& [k, piece] : mc.eig.pieces)
    out[flip_key(k, mc.eig.order, mc.orientation)] = decompose(piece);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// verification of one endoscopic case

namespace {

void verify_case(ReportSection& sec, const ModelSpec& spec, const EndoscopicCase& cs,
                 const FormalCharacter& rho_total) {
  const RootDatum& d = *spec.dual;
  std::string idp = spec.name + "." + cs.name;

  // locate the classes matching the selector
  std::vector<MatchedClass> matches;
  for (auto& p : enumerate_torsion(d, cs.ad_order)) {
    if (p.order != cs.exact_order) continue;
    if (cs.central && in_neutral_center(d, p.x) != cs.neutral) continue;
    RootDatum cent = centralizer_subsystem(d, p);
    if (cent.type_label() != cs.centralizer) continue;
    EigenspaceDecomposition eig = eigenspace_decomposition(rho_total, p);
    std::map<i64, i64> dims;
    for (auto& [k, piece] : eig.pieces) dims[k] = piece.dim();
    for (int orient : {+1, -1}) {
      std::map<i64, i64> flipped;
      for (auto& [k, v] : dims) flipped[flip_key(k, eig.order, orient)] = v;
      if (flipped == cs.eigen_dims) {
        matches.push_back({p, std::move(eig), orient});
        break;
      }
    }
  }
  sec.check_eq(idp + ".classes", "conjugacy classes matching (order " +
                                     std::to_string(cs.exact_order) + ", " + cs.centralizer +
                                     ", dims " + dimmap_str(cs.eigen_dims) + ")",
               static_cast<i64>(matches.size()), static_cast<i64>(cs.expected_count));
  if (matches.empty()) return;

  sec.check(idp + ".elliptic", "ellipticity of the class",
            is_elliptic(d, matches.front().point) ? "elliptic" : "non-elliptic",
            cs.elliptic ? "elliptic" : "non-elliptic");

  if (cs.central) {
    for (auto& mc : matches) {
      bool neutral = in_neutral_center(d, mc.point.x);
      sec.check(idp + ".component", "membership in the neutral component of the center",
                neutral ? "neutral" : "non-neutral", cs.neutral ? "neutral" : "non-neutral");
      // central action: a single eigenvalue class on each constituent
      bool scalar = true;
      for (auto& [label, hw] : spec.rho) {
        (void)label;
        if (eigenspace_decomposition(irrep_character(d, hw), mc.point).pieces.size() != 1)
          scalar = false;
      }
      sec.check(idp + ".scalar", "central element acts by a scalar on each constituent",
                scalar ? "scalar" : "not scalar", "scalar");
      break;
    }
  }

  // auxiliary characters: dimensions of the -1 eigenspace over the matches
  for (auto& [aux_label, expect_dims] : cs.aux_minus_dims) {
    auto it = spec.aux_weights.find(aux_label);
    if (it == spec.aux_weights.end()) {
      sec.fail(idp + ".aux", "auxiliary character " + aux_label, "missing weight");
      continue;
    }
    FormalCharacter aux = irrep_character(d, it->second);
    std::multiset<i64> got, want(expect_dims.begin(), expect_dims.end());
    for (auto& mc : matches) {
      auto eig = eigenspace_decomposition(aux, mc.point);
      i64 dminus = 0;
      if (eig.order % 2 == 0 && eig.pieces.count(eig.order / 2))
        dminus = eig.pieces.at(eig.order / 2).dim();
      got.insert(dminus);
    }
    std::string gs, ws;
    for (i64 v : got) gs += std::to_string(v) + " ";
    for (i64 v : want) ws += std::to_string(v) + " ";
    sec.check(idp + ".aux." + aux_label,
              "-1 eigenspace dimensions on the auxiliary character " + aux_label, gs, ws);
  }

  // piece identification and flags
  if (!cs.pieces.empty()) {
    for (size_t mi = 0; mi < matches.size(); ++mi) {
      auto& mc = matches[mi];
      const RootDatum& cent = *mc.eig.centralizer;
      auto decs = class_decompositions(mc);
      std::string tag = matches.size() > 1 ? "[" + std::to_string(mi) + "]" : "";

      // multiplicities are all 1 in the expected data
      bool mult_ok = true;
      for (auto& [k, list] : decs) {
        (void)k;
        for (auto& [hw, m] : list) {
          (void)hw;
          if (m != 1) mult_ok = false;
        }
      }
      sec.check(idp + tag + ".mults", "branch multiplicities over the centralizer",
                mult_ok ? "all 1" : "not multiplicity-free", "all 1");

      // structural identification under some consistent assignment
      bool matched = false;
      for (auto& asg : enumerate_assignments(cent, cs)) {
        bool all_ok = true;
        for (auto& [k, idxs] : cs.class_pieces) {
          std::multiset<std::pair<IVec, i64>> want;
          bool resolvable = true;
          for (int pi : idxs) {
            try {
              want.insert({expected_pattern(cent, cs.pieces[pi], asg), cs.pieces[pi].dim});
            } catch (const std::exception&) {
              resolvable = false;
            }
          }
          if (!resolvable) {
            all_ok = false;
            break;
          }
          std::multiset<std::pair<IVec, i64>> got;
          if (decs.count(k))
            for (auto& [hw, m] : decs[k]) {
              (void)m;
              got.insert({actual_pattern(cent, hw), dim_weyl(cent, hw)});
            }
          if (got != want) {
            all_ok = false;
            break;
          }
        }
        if (all_ok) {
          matched = true;
          break;
        }
      }
      sec.check(idp + tag + ".pieces",
                "piece identification over the centralizer (highest-weight patterns + dims)",
                matched ? "matched" : "mismatch", "matched");

      // duality and symplectic flags, multiset per class
      std::map<i64, std::multiset<std::string>> want_flags, got_flags;
      auto flag_str = [](i64 dim, bool sd, bool sympl) {
        return std::to_string(dim) + (sd ? (sympl ? ":sd-sympl" : ":sd-orth") : ":pair");
      };
      for (auto& [k, idxs] : cs.class_pieces)
        for (int pi : idxs)
          want_flags[k].insert(
              flag_str(cs.pieces[pi].dim, cs.pieces[pi].self_dual, cs.pieces[pi].symplectic));
      for (auto& [k, list] : decs)
        for (auto& [hw, m] : list) {
          (void)m;
          bool sd = cent.dominant_rep(vneg(hw)) == hw;
          bool sympl = sd && fs_indicator(cent, hw) == -1;
          got_flags[k].insert(flag_str(dim_weyl(cent, hw), sd, sympl));
        }
      std::string gs, ws;
      for (auto& [k, fl] : got_flags) {
        gs += std::to_string(k) + ":[";
        for (auto& f : fl) gs += f + " ";
        gs += "] ";
      }
      for (auto& [k, fl] : want_flags) {
        ws += std::to_string(k) + ":[";
        for (auto& f : fl) ws += f + " ";
        ws += "] ";
      }
      sec.check(idp + tag + ".flags", "self-duality and symplectic type of the pieces", gs,
                ws);

      // global duality involution: dual of class k lands in class -k
      bool invol_ok = true;
      for (auto& [k, list] : decs) {
        i64 kk = (mc.eig.order - k) % mc.eig.order;
        std::multiset<IVec> image, target;
        for (auto& [hw, m] : list) {
          (void)m;
          image.insert(cent.dominant_rep(vneg(hw)));
        }
        if (decs.count(kk))
          for (auto& [hw, m] : decs[kk]) {
            (void)m;
            target.insert(hw);
          }
        if (image != target) invol_ok = false;
      }
      sec.check(idp + tag + ".duality", "duality pairs eigenvalue classes k and -k",
                invol_ok ? "paired" : "broken", "paired");
    }
  }

  // component-group character structure
  {
    auto& mc = matches.front();
    OmegaStructure facts = omega_structure_check(mc.eig, rho_total.dim());

    // expected shape from the registered rule: count its root-number symbols
    int eps_count = 0;
    bool eps_is_rho_x = false;
    {
      std::istringstream is(cs.omega_rule);
      std::string tok;
      while (std::getline(is, tok, '*'))
        if (tok.rfind("eps(", 0) == 0) {
          ++eps_count;
          if (tok == "eps(rhoX)") eps_is_rho_x = true;
        }
    }
    std::string shape_want = (eps_count == 0) ? "no-minus-symbol"
                             : eps_is_rho_x   ? "eps(rhoX)"
                                              : "one-minus-symbol";
    sec.check(idp + ".omega", "omega rule shape [" + cs.omega_rule + "] vs the -1 eigenspace",
              facts.rule_shape, shape_want);

    if (!cs.eps_total.empty()) {
      // re-key the class symbols through the matching orientation
      SignExpr total = SignExpr::one();
      for (auto& [k, piece] : mc.eig.pieces) {
        (void)piece;
        if ((2 * k) % mc.eig.order == 0)
          total = total * SignExpr::symbol(
                              "eps(cls" + std::to_string(flip_key(k, mc.eig.order, mc.orientation)) + ")");
      }
      sec.check(idp + ".epsTotal", "formal total root number over eigenvalue classes",
                total.str(), cs.eps_total);
    }
  }

  if (cs.epsilon_sprime != 0)
    sec.record(idp + ".epsSign", "recorded endoscopic sign table entry",
               cs.epsilon_sprime > 0 ? "+1" : "-1");
  if (!cs.note.empty()) sec.record(idp + ".note", "recorded remark", cs.note);
}

}  // namespace

OmegaStructure omega_structure_check(const EigenspaceDecomposition& eig, i64 total_dim) {
  OmegaStructure f;
  i64 m = eig.order;
  f.minus_empty = (m % 2 != 0) || !eig.pieces.count(m / 2);
  i64 minus_dim = f.minus_empty ? 0 : eig.pieces.at(m / 2).dim();
  f.minus_everything = minus_dim == total_dim;
  for (auto& [k, piece] : eig.pieces) {
    (void)piece;
    if ((2 * k) % m == 0)
      f.eps_total = f.eps_total * SignExpr::symbol("eps(cls" + std::to_string(k) + ")");
  }
  f.rule_shape = f.minus_empty         ? "no-minus-symbol"
                 : f.minus_everything  ? "eps(rhoX)"
                                       : "one-minus-symbol";
  return f;
}

ReportSection verify_model(const ModelSpec& spec) {
  ReportSection sec;
  sec.name = "model " + spec.name;
  try {
    const RootDatum& d = *spec.dual;
    FormalCharacter rho_total = spec.rho_character();

    // dimensions, two independent routes
    i64 by_weyl = 0;
    for (auto& [label, hw] : spec.rho) {
      i64 dw = dim_weyl(d, hw);
      i64 dsupp = irrep_character(d, hw).dim();
      sec.check_eq(spec.name + ".dim." + label,
                   "dimension of " + label + " by two independent routes", dsupp, dw);
      by_weyl += dw;
    }
    sec.check_eq(spec.name + ".dim", "total dimension of the defining representation",
                 by_weyl, spec.total_dim);
    sec.check_eq(spec.name + ".dimSupport", "support sum equals the declared total",
                 rho_total.dim(), spec.total_dim);

    // symplectic type with the dual-pairing rule
    std::vector<std::pair<IVec, i64>> constituents;
    for (auto& [label, hw] : spec.rho) {
      (void)label;
      constituents.push_back({hw, 1});
    }
    sec.check(spec.name + ".symplectic", "defining representation is of symplectic type",
              symplectic_type(d, constituents) ? "symplectic" : "not symplectic",
              "symplectic");

    for (auto& cs : spec.cases) verify_case(sec, spec, cs, rho_total);
  } catch (const std::exception& e) {
    sec.fail(spec.name + ".exception", "unexpected failure", e.what());
  }
  return sec;
}

// ---------------------------------------------------------------------------
// the fixed verification suites

ReportSection verify_weyl_constants() {
  ReportSection sec;
  sec.name = "weyl constants";
  auto check = [&](const std::string& desc, i64 expect) {
    sec.check_eq("weyl." + desc, "Weyl group order of " + desc,
                 RootDatum::parse(desc).weyl_order(), expect);
  };
  check("F4scxA1scxA1scxA1sc", 9216);
  check("C3scxA1scxA1scxA1scxA1sc", 768);
  check("D4scxA1scxA1scxA1sc", 1536);
  check("F4sc", 1152);
  check("C3scxA1sc", 96);
  check("D4sc", 192);
  sec.check_eq("weyl.index", "index identity 9216/768 + 9216/1536",
               i64(9216 / 768 + 9216 / 1536), i64(18));
  return sec;
}

ReportSection verify_lemma_2_2() {
  ReportSection sec;
  sec.name = "elliptic lifts in E7";
  RootDatum e7 = RootDatum::parse("E7sc");

  // (a) the four maximal Levis of A type: every connected component of the
  // Levi's dual center meets the center of the full dual group, i.e. no
  // nonzero torsion class of X/Q_M dies in X/Q.
  struct LeviCase {
    std::string name;
    std::vector<int> deleted;  // 0-based Bourbaki node removed
  };
  const LeviCase levis[] = {
      {"A3+A2+A1", {3}}, {"A4+A2", {4}}, {"A5+A1", {2}}, {"A6", {1}},
  };
  IMat qg_rows;
  for (auto& r : e7.roots()) qg_rows.push_back(r);
  for (auto& lc : levis) {
    std::vector<int> subset;
    for (int i = 0; i < 7; ++i)
      if (std::find(lc.deleted.begin(), lc.deleted.end(), i) == lc.deleted.end())
        subset.push_back(i);
    RootDatum levi = e7.levi(subset);
    sec.check("lemma.levi." + lc.name + ".type", "Levi type", levi.type_label(),
              lc.name + "+T1");
    // torsion generators of X / Q_levi
    IMat rows;
    for (auto& r : levi.roots()) rows.push_back(r);
    SmithForm f = smith(rows);
    IMat vinv = unimodular_inverse(f.v);
    bool ok = true;
    std::vector<std::pair<IVec, i64>> gens;  // generator, order
    for (size_t i = 0; i < f.rank; ++i)
      if (f.s[i][i] > 1) gens.push_back({vinv[i], f.s[i][i]});
    std::function<void(size_t, IVec, bool)> walk = [&](size_t i, IVec acc, bool nonzero) {
      if (i == gens.size()) {
        if (!nonzero) return;
        QVec q(acc.size());
        for (size_t t = 0; t < acc.size(); ++t) q[t] = Rat(acc[t]);
        if (in_z_span(qg_rows, q)) ok = false;  // torsion class killed in X/Q
        return;
      }
      for (i64 c = 0; c < gens[i].second; ++c)
        walk(i + 1, vadd(acc, vscale(c, gens[i].first)), nonzero || c > 0);
    };
    walk(0, IVec(7, 0), false);
    sec.check("lemma.levi." + lc.name + ".center",
              "every component of the Levi center meets the ambient center",
              ok ? "yes" : "no", "yes");
  }

  // (b) elliptic torsion classes with the listed centralizer types
  auto elliptic_count = [&](i64 m, const std::string& label, i64 exact) {
    int n = 0;
    for (auto& p : enumerate_torsion(e7, m)) {
      if (exact != 0 && p.order != exact) continue;
      if (!is_elliptic(e7, p)) continue;
      if (centralizer_subsystem(e7, p).type_label() == label) ++n;
    }
    return n;
  };
  sec.check_eq("lemma.D6A1", "elliptic order-2 classes with centralizer D6+A1",
               elliptic_count(2, "D6+A1", 2), 2);
  sec.check_eq("lemma.A5A2.ord3", "elliptic A5+A2 class of order 3",
               elliptic_count(3, "A5+A2", 3), 1);
  sec.check_eq("lemma.A5A2.ord6", "elliptic A5+A2 class of order 6",
               elliptic_count(3, "A5+A2", 6), 1);
  sec.check_eq("lemma.A3A3A1", "elliptic A3+A3+A1 class of order 4",
               elliptic_count(4, "A3+A3+A1", 4), 1);
  sec.check_eq("lemma.A7", "elliptic A7 class", elliptic_count(2, "A7", 4), 1);

  // central elements are elliptic
  bool central_ok = true;
  for (auto& p : enumerate_torsion(e7, 2))
    if (centralizer_subsystem(e7, p).type_label() == "E7" && !is_elliptic(e7, p))
      central_ok = false;
  sec.check("lemma.central", "central elements are elliptic", central_ok ? "yes" : "no",
            "yes");

  // centers of the centralizer subgroups named in the case analysis
  auto center_order = [&](const std::string& label, i64 m) -> i64 {
    for (auto& p : enumerate_torsion(e7, m))
      if (centralizer_subsystem(e7, p).type_label() == label)
        return centralizer_subsystem(e7, p).center().order();
    return -1;
  };
  sec.check_eq("lemma.center.D6A1", "center order of the D6+A1 centralizer",
               center_order("D6+A1", 2), i64(4));
  sec.check_eq("lemma.center.A5A2", "center order of the A5+A2 centralizer",
               center_order("A5+A2", 3), i64(6));
  sec.check_eq("lemma.center.A3A3A1", "center order of the A3+A3+A1 centralizer",
               center_order("A3+A3+A1", 4), i64(8));
  sec.check_eq("lemma.center.A7", "center order of the A7 centralizer",
               center_order("A7", 2), i64(4));
  return sec;
}

ReportSection verify_endoscopy_cancellation() {
  ReportSection sec;
  sec.name = "endoscopic sign cancellation";
  StableClass generic = parse_stable_shape("E(a1),E(a2)|E(b1),E(b2)");
  sec.check_eq("cancel.matches", "stable matches of the generic class",
               static_cast<i64>(stable_matches(generic).size()), i64(6));
  for (int eta : {+1, -1}) {
    std::string tag = eta > 0 ? "+" : "-";
    auto qs = rational_classes(generic, Side::QuasiSplit, eta);
    auto in = rational_classes(generic, Side::InnerForms, eta);
    sec.check_eq("cancel.classes.qs.eta" + tag, "quasi-split rational classes",
                 static_cast<i64>(qs.size()), i64(2));
    sec.check_eq("cancel.classes.in.eta" + tag, "inner-form rational classes",
                 static_cast<i64>(in.size()), i64(2));
    sec.check_eq("cancel.generic.eta" + tag, "cancellation sum for the generic class",
                 verify_cancellation(generic, eta), i64(0));
  }
  std::vector<std::string> shapes = {
      "E(a1),E(a2)|E(b1),E(b2)", "E(a),E(a)|E(b1),E(b2)", "E(a1),E(a2)|Q(q)",
      "Q(q)|E(a1),E(a2)",        "Q(q1)|Q(q2)",           "E(a),E(a)|E(a),E(a)",
      "E(a1),E(a2)|E(a1),E(a2)", "Q(q)|Q(q)",             "E(a),E(a)|Q(q)",
  };
  i64 worst = 0;
  for (auto& s : shapes)
    for (int eta : {+1, -1}) worst = std::max(worst, verify_cancellation(parse_stable_shape(s), eta));
  sec.check_eq("cancel.sweep", "exhaustive sweep over small stable shapes, both branches",
               worst, i64(0));

  auto dbl = gso_class_doubling("t");
  sec.check_eq("cancel.gso.classes", "even-orthogonal rational class doubling",
               static_cast<i64>(dbl.g_classes.size()), i64(2));
  sec.check_eq("cancel.gso.stable", "even-orthogonal endoscopic stable classes",
               static_cast<i64>(dbl.gp_classes.size()), i64(4));
  sec.record("cancel.quaternion", "quaternion-side pairing sign",
             "per-match constant flag, carried not derived");
  return sec;
}

// ---------------------------------------------------------------------------
// the registry

namespace {

using Piece = ExpectedPiece;
using Factors = std::vector<std::pair<std::string, std::string>>;

Piece sd_piece(Factors f, i64 dim) { return Piece{std::move(f), dim, true, true, -1}; }
Piece pair_piece(Factors f, i64 dim, int partner) {
  return Piece{std::move(f), dim, false, false, partner};
}

EndoscopicCase central_case(const std::string& name, i64 exact, std::map<i64, i64> eigen,
                            const std::string& omega, bool neutral, int count = 1) {
  EndoscopicCase c;
  c.name = name;
  c.ad_order = 1;
  c.exact_order = exact;
  c.expected_count = count;
  c.eigen_dims = std::move(eigen);
  c.omega_rule = omega;
  c.central = true;
  c.neutral = neutral;
  c.elliptic = true;
  return c;
}

ModelSpec base_model(const std::string& name, const std::string& descriptor, i64 total,
                     bool table_row = true) {
  ModelSpec m;
  m.name = name;
  m.dual_descriptor = descriptor;
  m.dual = std::make_shared<RootDatum>(RootDatum::parse(descriptor));
  m.total_dim = total;
  m.table_row = table_row;
  return m;
}

void add_rho(ModelSpec& m, const std::string& label, const IVec& pattern,
             bool prefer_self_dual = true) {
  m.rho.push_back({label, resolve_weight(*m.dual, pattern, prefer_self_dual)});
}

void add_dual_rho(ModelSpec& m, const std::string& label, const std::string& of_label) {
  for (auto& [l, hw] : m.rho)
    if (l == of_label) {
      m.rho.push_back({label, m.dual->dominant_rep(vneg(hw))});
      return;
    }
  throw std::logic_error("no constituent " + of_label);
}

// expected centralizer of a central element: the full system
std::string full_label(const ModelSpec& m) { return m.dual->type_label(); }

std::vector<ModelSpec> build_all() {
  std::vector<ModelSpec> out;

  // ---- products of general linear groups ---------------------------------
  {
    ModelSpec m = base_model("GL4xGL2", "GL4xGL2~[1,1,1,1,1,1]", 20);
    add_rho(m, "ext2xstd2", {0, 1, 0, 1});
    add_rho(m, "std4", {1, 0, 0, 0}, false);
    add_dual_rho(m, "std4dual", "std4");
    auto c1 = central_case("center-id", 1, {{0, 20}}, "1", true);
    c1.centralizer = full_label(m);
    auto c2 = central_case("center-minus", 2, {{1, 20}}, "eps(rhoX)", false);
    c2.centralizer = full_label(m);
    m.cases = {c1, c2};
    out.push_back(std::move(m));
  }
  {
    ModelSpec m = base_model("GU4xGU2", "GL4xGL2xT1~[1,1,1,1,1,1,0]", 20);
    add_rho(m, "ext2xstd2", {0, 1, 0, 1});
    add_rho(m, "std4", {1, 0, 0, 0}, false);
    add_dual_rho(m, "std4dual", "std4");
    std::string full = full_label(m);
    auto c1 = central_case("center-id", 1, {{0, 20}}, "1", true);
    auto c2 = central_case("center-s2minus", 2, {{0, 8}, {1, 12}},
                           "etaEF(-1)*chiphi(-1)*eps(rho1)", false);
    auto c3 = central_case("center-s1minus", 2, {{0, 12}, {1, 8}}, "chiphi(-1)*eps(rho2)",
                           true);
    auto c4 = central_case("center-both", 2, {{1, 20}}, "etaEF(-1)*eps(rhoX)", false);
    for (auto* c : {&c1, &c2, &c3, &c4}) c->centralizer = full;

    EndoscopicCase n1;
    n1.name = "split-s2plus";
    n1.ad_order = 2;
    n1.exact_order = 2;
    n1.centralizer = "A1+A1+A1+T3";
    n1.eigen_dims = {{0, 8}, {1, 12}};
    n1.pieces = {
        sd_piece({{"A1#0", "std"}, {"A1#1", "std"}, {"A1#2", "std"}}, 8),  // 0
        pair_piece({{"A1#1", "std"}}, 2, 2),                               // 1: std(W-)
        pair_piece({{"A1#1", "std"}}, 2, 1),                               // 2: its dual
        pair_piece({{"A1#2", "std"}}, 2, 4),  // 3: std2 (x) ext2(W+)
        pair_piece({{"A1#2", "std"}}, 2, 3),  // 4: std2 (x) ext2(W-)
        pair_piece({{"A1#0", "std"}}, 2, 6),  // 5: std(W+)
        pair_piece({{"A1#0", "std"}}, 2, 5),  // 6: its dual
    };
    n1.class_pieces = {{1, {0, 1, 2}}, {0, {3, 4, 5, 6}}};
    n1.omega_rule = "etaEF(-1)*chi2(-1)*eps(Vminus)";
    n1.elliptic = false;
    n1.note = "elliptic only as a twisted endoscopic datum; the connected centralizer "
              "keeps an excess central torus";
    EndoscopicCase n2 = n1;
    n2.name = "split-s2minus";
    n2.eigen_dims = {{0, 12}, {1, 8}};
    n2.class_pieces = {{0, {0, 1, 2}}, {1, {3, 4, 5, 6}}};
    n2.omega_rule = "chi1(-1)*eps(Vminus)";
    n2.elliptic = false;
    m.cases = {c1, c2, c3, c4, n1, n2};
    out.push_back(std::move(m));
  }

  // ---- symplectic similitude pairs ---------------------------------------
  {
    ModelSpec m = base_model("GSp6xGSp4", "GSpin7xGSpin5~[1,1,1,2,1,1,2]", 32);
    add_rho(m, "spin7xspin5", {0, 0, 1, 0, 1});
    m.aux_weights["W7"] = resolve_weight(*m.dual, {1, 0, 0, 0, 0});
    m.aux_weights["W5"] = resolve_weight(*m.dual, {0, 0, 0, 1, 0});
    std::string full = full_label(m);
    auto c1 = central_case("center-id", 1, {{0, 32}}, "1", true);
    auto c2 = central_case("center-neutral-zz", 2, {{0, 32}}, "1", true);
    auto c3 = central_case("center-nonneutral", 2, {{1, 32}}, "eps(rhoX)", false, 2);
    for (auto* c : {&c1, &c2, &c3}) c->centralizer = full;
    c1.aux_minus_dims = {{"W7", {0}}, {"W5", {0}}};
    c2.aux_minus_dims = {{"W7", {0}}, {"W5", {0}}};

    EndoscopicCase o4;
    o4.name = "order4";
    o4.ad_order = 2;
    o4.exact_order = 4;
    o4.centralizer = "A3+B2+T1";
    o4.eigen_dims = {{1, 16}, {3, 16}};
    o4.pieces = {pair_piece({{"A3#0", "hspin_a"}, {"B2#0", "spin"}}, 16, 1),
                 pair_piece({{"A3#0", "hspin_b"}, {"B2#0", "spin"}}, 16, 0)};
    o4.class_pieces = {{1, {0}}, {3, {1}}};
    o4.omega_rule = "1";
    o4.eps_total = "1";
    o4.expected_count = 2;  // the class and its central companion
    o4.aux_minus_dims = {{"W7", {6, 6}}, {"W5", {0, 0}}};

    EndoscopicCase c40;
    c40.name = "order2-40";
    c40.ad_order = 2;
    c40.exact_order = 2;
    c40.centralizer = "B2+A1+A1+A1+T1";
    c40.eigen_dims = {{0, 16}, {1, 16}};
    c40.pieces = {sd_piece({{"B2#0", "spin"}, {"A1#0", "std"}, {"A1#1", "std"}}, 16),
                  sd_piece({{"B2#0", "spin"}, {"A1#0", "std"}, {"A1#2", "std"}}, 16)};
    c40.class_pieces = {{0, {0}}, {1, {1}}};
    c40.omega_rule = "eps(Vminus)";
    c40.expected_count = 2;
    c40.aux_minus_dims = {{"W7", {4, 4}}, {"W5", {0, 0}}};

    EndoscopicCase c04;
    c04.name = "order2-04";
    c04.ad_order = 2;
    c04.exact_order = 2;
    c04.centralizer = "B3+A1+A1+T1";
    c04.eigen_dims = {{0, 16}, {1, 16}};
    c04.pieces = {sd_piece({{"B3#0", "spin"}, {"A1#0", "std"}}, 16),
                  sd_piece({{"B3#0", "spin"}, {"A1#1", "std"}}, 16)};
    c04.class_pieces = {{0, {0}}, {1, {1}}};
    c04.omega_rule = "eps(Vminus)";
    c04.expected_count = 2;
    c04.aux_minus_dims = {{"W7", {0, 0}}, {"W5", {4, 4}}};

    EndoscopicCase c44;
    c44.name = "order2-44";
    c44.ad_order = 2;
    c44.exact_order = 2;
    c44.centralizer = "A1+A1+A1+A1+A1+T1";
    c44.eigen_dims = {{0, 16}, {1, 16}};
    c44.pieces = {
        sd_piece({{"A1#0", "std"}, {"A1#1", "std"}, {"A1#3", "std"}}, 8),
        sd_piece({{"A1#0", "std"}, {"A1#2", "std"}, {"A1#4", "std"}}, 8),
        sd_piece({{"A1#0", "std"}, {"A1#1", "std"}, {"A1#4", "std"}}, 8),
        sd_piece({{"A1#0", "std"}, {"A1#2", "std"}, {"A1#3", "std"}}, 8),
    };
    c44.class_pieces = {{0, {0, 1}}, {1, {2, 3}}};
    c44.omega_rule = "eps(Vminus)";
    c44.aux_minus_dims = {{"W7", {4}}, {"W5", {4}}};
    m.cases = {c1, c2, c3, o4, c40, c04, c44};
    out.push_back(std::move(m));
  }

  // ---- general linear / unitary rank 6 ------------------------------------
  {
    ModelSpec m = base_model("GL6", "A5sc", 20);
    add_rho(m, "ext3", {0, 0, 1, 0, 0});
    std::string full = full_label(m);
    auto c1 = central_case("center-ord1", 1, {{0, 20}}, "1", true);
    auto c2 = central_case("center-ord2", 2, {{1, 20}}, "eps(rhoX)", false);
    auto c3 = central_case("center-ord3", 3, {{0, 20}}, "1", false, 2);
    auto c6 = central_case("center-ord6", 6, {{3, 20}}, "eps(rhoX)", false, 2);
    for (auto* c : {&c1, &c2, &c3, &c6}) c->centralizer = full;
    m.cases = {c1, c2, c3, c6};
    out.push_back(std::move(m));
  }
  {
    ModelSpec m = base_model("GU6", "A5sc", 20);
    add_rho(m, "ext3", {0, 0, 1, 0, 0});
    std::string full = full_label(m);
    auto c1 = central_case("center-id", 1, {{0, 20}}, "1", true);
    auto c2 = central_case("center-minus", 2, {{1, 20}}, "etaEF(-1)*eps(rhoX)", false);
    for (auto* c : {&c1, &c2}) c->centralizer = full;

    EndoscopicCase wp2;
    wp2.name = "split-wplus2";
    wp2.ad_order = 2;
    wp2.exact_order = 2;
    wp2.centralizer = "A3+A1+T1";
    wp2.eigen_dims = {{0, 12}, {1, 8}};
    wp2.pieces = {sd_piece({{"A3#0", "ext2"}, {"A1#0", "std"}}, 12),
                  pair_piece({{"A3#0", "dual_std"}}, 4, 2),
                  pair_piece({{"A3#0", "std"}}, 4, 1)};
    wp2.class_pieces = {{0, {0}}, {1, {1, 2}}};
    wp2.omega_rule = "chiphi(-1)*eps(rho2)";
    wp2.elliptic = false;
    wp2.note = "elliptic only as a twisted endoscopic datum; the connected centralizer "
               "keeps an excess central torus";
    EndoscopicCase wp4 = wp2;
    wp4.name = "split-wplus4";
    wp4.eigen_dims = {{0, 8}, {1, 12}};
    wp4.class_pieces = {{1, {0}}, {0, {1, 2}}};
    wp4.omega_rule = "etaEF(-1)*chiphi(-1)*eps(rho1)";
    m.cases = {c1, c2, wp2, wp4};
    out.push_back(std::move(m));
  }

  // ---- odd spin duals ------------------------------------------------------
  {
    ModelSpec m = base_model("GSp10", "B5sc", 32);
    add_rho(m, "spin11", {0, 0, 0, 0, 1});
    m.aux_weights["W"] = resolve_weight(*m.dual, {1, 0, 0, 0, 0});
    std::string full = full_label(m);
    auto c1 = central_case("center-id", 1, {{0, 32}}, "1", true);
    auto c2 = central_case("center-z", 2, {{1, 32}}, "eps(rhoX)", false);
    for (auto* c : {&c1, &c2}) c->centralizer = full;

    EndoscopicCase m4;
    m4.name = "order2-minus4";
    m4.ad_order = 2;
    m4.exact_order = 2;
    m4.centralizer = "B3+A1+A1";
    m4.eigen_dims = {{0, 16}, {1, 16}};
    m4.pieces = {sd_piece({{"B3#0", "spin"}, {"A1#0", "std"}}, 16),
                 sd_piece({{"B3#0", "spin"}, {"A1#1", "std"}}, 16)};
    m4.class_pieces = {{0, {0}}, {1, {1}}};
    m4.omega_rule = "eps(Vminus)";
    m4.aux_minus_dims = {{"W", {4}}};

    EndoscopicCase m6;
    m6.name = "order4-minus6";
    m6.ad_order = 2;
    m6.exact_order = 4;
    m6.centralizer = "A3+B2";
    m6.eigen_dims = {{1, 16}, {3, 16}};
    m6.pieces = {pair_piece({{"B2#0", "spin"}, {"A3#0", "hspin_a"}}, 16, 1),
                 pair_piece({{"B2#0", "spin"}, {"A3#0", "hspin_b"}}, 16, 0)};
    m6.class_pieces = {{1, {0}}, {3, {1}}};
    m6.omega_rule = "1";
    m6.eps_total = "1";
    m6.aux_minus_dims = {{"W", {6}}};

    EndoscopicCase m8;
    m8.name = "order2-minus8";
    m8.ad_order = 2;
    m8.exact_order = 2;
    m8.centralizer = "D4+A1";
    m8.eigen_dims = {{0, 16}, {1, 16}};
    m8.pieces = {sd_piece({{"A1#0", "std"}, {"D4#0", "hspin_a"}}, 16),
                 sd_piece({{"A1#0", "std"}, {"D4#0", "hspin_b"}}, 16)};
    m8.class_pieces = {{0, {0}}, {1, {1}}};
    m8.omega_rule = "eps(Vminus)";
    m8.aux_minus_dims = {{"W", {8}}};

    EndoscopicCase m10;
    m10.name = "order4-minus10";
    m10.ad_order = 2;
    m10.exact_order = 4;
    m10.centralizer = "D5";
    m10.eigen_dims = {{1, 16}, {3, 16}};
    m10.pieces = {pair_piece({{"D5#0", "hspin_a"}}, 16, 1),
                  pair_piece({{"D5#0", "hspin_b"}}, 16, 0)};
    m10.class_pieces = {{1, {0}}, {3, {1}}};
    m10.omega_rule = "1";
    m10.eps_total = "1";
    m10.aux_minus_dims = {{"W", {10}}};
    m.cases = {c1, c2, m4, m6, m8, m10};
    out.push_back(std::move(m));
  }
  {
    ModelSpec m = base_model("GSp6xGL2", "GSpin7xGL2~[1,1,1,2,1,1]", 16);
    add_rho(m, "spin7xstd2", {0, 0, 1, 1});
    m.aux_weights["W"] = resolve_weight(*m.dual, {1, 0, 0, 0});
    std::string full = full_label(m);
    auto c1 = central_case("center-id", 1, {{0, 16}}, "1", true);
    auto c2 = central_case("center-neutral-z", 2, {{0, 16}}, "1", true);
    auto c3 = central_case("center-nonneutral", 2, {{1, 16}}, "eps(rhoX)", false, 2);
    for (auto* c : {&c1, &c2, &c3}) c->centralizer = full;

    EndoscopicCase m4;
    m4.name = "order2-minus4";
    m4.ad_order = 2;
    m4.exact_order = 2;
    m4.centralizer = "A1+A1+A1+A1+T1";
    m4.eigen_dims = {{0, 8}, {1, 8}};
    m4.pieces = {sd_piece({{"A1#0", "std"}, {"A1#1", "std"}, {"A1#3", "std"}}, 8),
                 sd_piece({{"A1#0", "std"}, {"A1#2", "std"}, {"A1#3", "std"}}, 8)};
    m4.class_pieces = {{0, {0}}, {1, {1}}};
    m4.omega_rule = "eps(Vminus)";
    m4.expected_count = 2;
    m4.aux_minus_dims = {{"W", {4, 4}}};

    EndoscopicCase m6;
    m6.name = "order4-minus6";
    m6.ad_order = 2;
    m6.exact_order = 4;
    m6.centralizer = "A3+A1+T1";
    m6.eigen_dims = {{1, 8}, {3, 8}};
    m6.pieces = {pair_piece({{"A3#0", "hspin_a"}, {"A1#0", "std"}}, 8, 1),
                 pair_piece({{"A3#0", "hspin_b"}, {"A1#0", "std"}}, 8, 0)};
    m6.class_pieces = {{1, {0}}, {3, {1}}};
    m6.omega_rule = "1";
    m6.eps_total = "1";
    m6.expected_count = 2;
    m6.aux_minus_dims = {{"W", {6, 6}}};
    m.cases = {c1, c2, c3, m4, m6};
    out.push_back(std::move(m));
  }

  // ---- even spin duals -----------------------------------------------------
  {
    ModelSpec m = base_model("GSO8xGL2", "GSpin8xGL2~[1,1,1,1,2,1,1]", 16);
    add_rho(m, "hspin8xstd2", {0, 0, 0, 1, 1});
    std::string full = full_label(m);
    auto c1 = central_case("center-id", 1, {{0, 16}}, "1", true);
    auto c2 = central_case("center-neutral", 2, {{0, 16}}, "1", true);
    auto c3 = central_case("center-plus", 2, {{0, 16}}, "1", false, 2);
    auto c4 = central_case("center-minus", 2, {{1, 16}}, "eps(rhoX)", false, 4);
    for (auto* c : {&c1, &c2, &c3, &c4}) c->centralizer = full;

    EndoscopicCase m4;
    m4.name = "order2-minus4";
    m4.ad_order = 2;
    m4.exact_order = 2;
    m4.centralizer = "A1+A1+A1+A1+A1+T1";
    m4.eigen_dims = {{0, 8}, {1, 8}};
    m4.expected_count = 2;
    m4.pieces = {sd_piece({{"A1#0", "std"}, {"A1#1", "std"}, {"A1#4", "std"}}, 8),
                 sd_piece({{"A1#2", "std"}, {"A1#3", "std"}, {"A1#4", "std"}}, 8)};
    m4.class_pieces = {{0, {0}}, {1, {1}}};
    m4.omega_rule = "eps(Vminus)";
    m.cases = {c1, c2, c3, c4, m4};
    out.push_back(std::move(m));
  }
  {
    ModelSpec m = base_model("GSO12", "D6sc", 32);
    add_rho(m, "hspin12", {0, 0, 0, 0, 0, 1});
    m.aux_weights["W"] = resolve_weight(*m.dual, {1, 0, 0, 0, 0, 0});
    std::string full = full_label(m);
    auto c1 = central_case("center-id", 1, {{0, 32}}, "1", true);
    auto c2 = central_case("center-zprime", 2, {{0, 32}}, "1", false);
    auto c3 = central_case("center-z-zzprime", 2, {{1, 32}}, "eps(rhoX)", false, 2);
    for (auto* c : {&c1, &c2, &c3}) c->centralizer = full;

    EndoscopicCase m48;
    m48.name = "order2-minus4or8";
    m48.ad_order = 2;
    m48.exact_order = 2;
    m48.centralizer = "D4+A1+A1";
    m48.eigen_dims = {{0, 16}, {1, 16}};
    m48.expected_count = 2;
    m48.pieces = {sd_piece({{"D4#0", "hspin_a"}, {"A1#0", "std"}}, 16),
                  sd_piece({{"D4#0", "hspin_b"}, {"A1#1", "std"}}, 16)};
    m48.class_pieces = {{0, {0}}, {1, {1}}};
    m48.omega_rule = "eps(Vminus)";
    m48.aux_minus_dims = {{"W", {4, 8}}};

    EndoscopicCase m6;
    m6.name = "order4-minus6";
    m6.ad_order = 2;
    m6.exact_order = 4;
    m6.centralizer = "A3+A3";
    m6.eigen_dims = {{1, 16}, {3, 16}};
    m6.pieces = {pair_piece({{"A3#0", "hspin_a"}, {"A3#1", "hspin_a"}}, 16, 1),
                 pair_piece({{"A3#0", "hspin_b"}, {"A3#1", "hspin_b"}}, 16, 0)};
    m6.class_pieces = {{1, {0}}, {3, {1}}};
    m6.omega_rule = "1";
    m6.eps_total = "1";
    m6.aux_minus_dims = {{"W", {6}}};
    m.cases = {c1, c2, c3, m48, m6};
    out.push_back(std::move(m));
  }

  // ---- the exceptional model ----------------------------------------------
  {
    ModelSpec m = base_model("E7", "E7sc", 56);
    add_rho(m, "omega7", {0, 0, 0, 0, 0, 0, 1});
    auto c1 = central_case("center-id", 1, {{0, 56}}, "1", true);
    auto c2 = central_case("center-z", 2, {{1, 56}}, "eps(rhoX)", false);
    c1.centralizer = "E7";
    c2.centralizer = "E7";

    EndoscopicCase d24;
    d24.name = "D6A1-minus24";
    d24.ad_order = 2;
    d24.exact_order = 2;
    d24.centralizer = "D6+A1";
    d24.eigen_dims = {{0, 32}, {1, 24}};
    d24.pieces = {sd_piece({{"D6#0", "hspin_a"}}, 32),
                  sd_piece({{"D6#0", "vector"}, {"A1#0", "std"}}, 24)};
    d24.class_pieces = {{0, {0}}, {1, {1}}};
    d24.omega_rule = "eps(Vminus)";
    d24.epsilon_sprime = -1;
    EndoscopicCase d32 = d24;
    d32.name = "D6A1-minus32";
    d32.eigen_dims = {{0, 24}, {1, 32}};
    d32.class_pieces = {{1, {0}}, {0, {1}}};
    d32.epsilon_sprime = +1;

    EndoscopicCase a3;
    a3.name = "A5A2-order3";
    a3.ad_order = 3;
    a3.exact_order = 3;
    a3.centralizer = "A5+A2";
    a3.eigen_dims = {{0, 20}, {1, 18}, {2, 18}};
    a3.pieces = {sd_piece({{"A5#0", "ext3"}}, 20),
                 pair_piece({{"A5#0", "std"}, {"A2#0", "std"}}, 18, 2),
                 pair_piece({{"A5#0", "dual_std"}, {"A2#0", "dual_std"}}, 18, 1)};
    a3.class_pieces = {{0, {0}}, {1, {1}}, {2, {2}}};
    a3.omega_rule = "1";
    a3.eps_total = "eps(cls0)";
    a3.epsilon_sprime = +1;
    EndoscopicCase a6 = a3;
    a6.name = "A5A2-order6";
    a6.exact_order = 6;
    a6.eigen_dims = {{3, 20}, {1, 18}, {5, 18}};
    a6.class_pieces = {{3, {0}}, {1, {1}}, {5, {2}}};
    a6.omega_rule = "eps(Vminus)";
    a6.eps_total = "eps(cls3)";
    a6.epsilon_sprime = -1;

    EndoscopicCase q4;
    q4.name = "A3A3A1";
    q4.ad_order = 4;
    q4.exact_order = 4;
    q4.centralizer = "A3+A3+A1";
    q4.eigen_dims = {{0, 12}, {2, 12}, {1, 16}, {3, 16}};
    q4.pieces = {sd_piece({{"A3#0", "ext2"}, {"A1#0", "std"}}, 12),
                 sd_piece({{"A3#1", "ext2"}, {"A1#0", "std"}}, 12),
                 pair_piece({{"A3#0", "std"}, {"A3#1", "dual_std"}}, 16, 3),
                 pair_piece({{"A3#0", "dual_std"}, {"A3#1", "std"}}, 16, 2)};
    q4.class_pieces = {{0, {0}}, {2, {1}}, {1, {2}}, {3, {3}}};
    q4.omega_rule = "eps(Vminus)";
    q4.note = "endoscopic sign is -1 when the auxiliary factor of the lift is trivial, "
              "+1 when it is the nontrivial square root";

    EndoscopicCase a7;
    a7.name = "A7";
    a7.ad_order = 2;
    a7.exact_order = 4;
    a7.centralizer = "A7";
    a7.eigen_dims = {{1, 28}, {3, 28}};
    a7.pieces = {pair_piece({{"A7#0", "ext2"}}, 28, 1),
                 pair_piece({{"A7#0", "dual_ext2"}}, 28, 0)};
    a7.class_pieces = {{1, {0}}, {3, {1}}};
    a7.omega_rule = "1";
    a7.eps_total = "1";
    m.cases = {c1, c2, d24, d32, a3, a6, q4, a7};
    out.push_back(std::move(m));
  }

  // ---- auxiliaries (smaller and reduced models) ----------------------------
  {
    ModelSpec m = base_model("GU4xGU2-reduced", "GL4xGL2xT1~[1,1,1,1,1,1,0]", 20, false);
    add_rho(m, "ext2xstd2", {0, 1, 0, 1});
    add_rho(m, "std4", {1, 0, 0, 0}, false);
    add_dual_rho(m, "std4dual", "std4");
    out.push_back(std::move(m));
  }
  {
    ModelSpec m =
        base_model("GSp4xGL2xGL2", "GSpin5xGL2xGL2~[1,1,2,1,1,1,1]", 16, false);
    add_rho(m, "spin5xstd2xstd2", {0, 1, 1, 1});
    out.push_back(std::move(m));
  }
  {
    ModelSpec m;
    m.name = "GHSpin12";
    m.dual_descriptor = "levi(E7sc;D6)";
    m.dual = std::make_shared<RootDatum>(RootDatum::parse("E7sc").levi({1, 2, 3, 4, 5, 6}));
    m.total_dim = 32;
    m.table_row = false;
    // the two half-spin-type weights; the defining one has total weight zero
    IVec a = resolve_weight(*m.dual, {0, 0, 0, 0, 1, 0});
    IVec b = resolve_weight(*m.dual, {0, 0, 0, 0, 0, 1});
    auto weight_sum = [&](const IVec& hw) {
      IVec s(m.dual->rank(), 0);
      for (auto& [w, mult] : irrep_character(*m.dual, hw).mults)
        s = vadd(s, vscale(mult, w));
      return s;
    };
    IVec plus = is_zero(weight_sum(a)) ? a : b;
    IVec minus = is_zero(weight_sum(a)) ? b : a;
    if (!is_zero(weight_sum(plus)))
      throw std::logic_error("no determinant-one half-spin weight found");
    m.rho.push_back({"hspin_plus", plus});
    m.aux_weights["hspin_minus"] = minus;
    out.push_back(std::move(m));
  }
  {
    ModelSpec m;
    m.name = "GHSpin12xGSpin3";
    m.dual_descriptor = "(levi(E7sc;D6) x GL2)^1";
    RootDatum levi = RootDatum::parse("E7sc").levi({1, 2, 3, 4, 5, 6});
    RootDatum prod = RootDatum::product({levi, RootDatum::gl(2)});
    IMat rows;
    for (auto& cv : levi.positive_coroots()) rows.push_back(cv);
    IMat l = int_kernel(rows, levi.rank());
    if (l.size() != 1) throw std::logic_error("similitude character is not rank one");
    IVec v = l[0];
    v.push_back(1);
    v.push_back(1);
    m.dual = std::make_shared<RootDatum>(prod.quotient_lattice(v));
    m.total_dim = 24;
    m.table_row = false;
    add_rho(m, "std12xstd2", {1, 0, 0, 0, 0, 0, 1});
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

const std::vector<ModelSpec>& builtin_models() {
  static const std::vector<ModelSpec> all = build_all();
  return all;
}

std::vector<ModelSpec> load_models_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  nlohmann::json j;
  in >> j;
  std::vector<ModelSpec> out;
  for (auto& jm : j.at("models")) {
    ModelSpec m;
    m.name = jm.at("name").get<std::string>();
    m.dual_descriptor = jm.at("dual").get<std::string>();
    m.dual = std::make_shared<RootDatum>(RootDatum::parse(m.dual_descriptor));
    m.total_dim = jm.at("dim").get<i64>();
    m.table_row = false;
    for (auto& jr : jm.at("rho")) {
      if (jr.is_array()) {
        IVec hw = jr.get<IVec>();
        m.rho.push_back({"rho" + std::to_string(m.rho.size() + 1), hw});
      }
    }
    if (jm.contains("cases")) {
      for (auto& jc : jm.at("cases")) {
        EndoscopicCase c;
        c.name = jc.at("name").get<std::string>();
        c.ad_order = jc.value("ad_order", 1);
        c.exact_order = jc.value("exact_order", 1);
        c.centralizer = jc.at("centralizer").get<std::string>();
        c.expected_count = jc.value("count", 1);
        c.elliptic = jc.value("elliptic", true);
        c.central = jc.value("central", false);
        c.neutral = jc.value("neutral", false);
        c.omega_rule = jc.value("omega", std::string("1"));
        for (auto& [k, v] : jc.at("eigen").items())
          c.eigen_dims[std::stoll(k)] = v.get<i64>();
        c.eps_total = jc.value("eps_total", std::string(""));
        if (jc.contains("pieces")) {
          for (auto& jp : jc.at("pieces")) {
            ExpectedPiece p;
            for (auto& jf : jp.at("factors"))
              p.factors.push_back({jf.at(0).get<std::string>(), jf.at(1).get<std::string>()});
            p.dim = jp.at("dim").get<i64>();
            p.self_dual = jp.value("self_dual", true);
            p.symplectic = jp.value("symplectic", true);
            p.dual_partner = jp.value("dual_partner", -1);
            c.pieces.push_back(std::move(p));
          }
          for (auto& [k, v] : jc.at("class_pieces").items())
            c.class_pieces[std::stoll(k)] = v.get<std::vector<int>>();
        }
        m.cases.push_back(std::move(c));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

VerificationReport verify_all(const std::vector<std::string>& model_filter,
                              const std::vector<ModelSpec>& extra_models) {
  VerificationReport rep;
  bool filtered = !model_filter.empty();
  auto wanted = [&](const std::string& name) {
    return !filtered ||
           std::find(model_filter.begin(), model_filter.end(), name) != model_filter.end();
  };
  if (!filtered) {
    rep.sections.push_back(verify_weyl_constants());
    rep.sections.push_back(verify_lemma_2_2());
  }
  std::vector<const ModelSpec*> todo;
  for (auto& m : builtin_models())
    if (wanted(m.name)) todo.push_back(&m);
  for (auto& m : extra_models)
    if (wanted(m.name)) todo.push_back(&m);
  std::vector<ReportSection> sections(todo.size());
  par_for(static_cast<std::ptrdiff_t>(todo.size()),
          [&](std::ptrdiff_t i) { sections[i] = verify_model(*todo[i]); });
  for (auto& s : sections) rep.sections.push_back(std::move(s));
  if (!filtered) rep.sections.push_back(verify_endoscopy_cancellation());
  return rep;
}

}  // namespace lie
