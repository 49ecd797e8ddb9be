#include "lie/torsion.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace lie {

namespace {

bool qvec_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

// Projection onto the coroot span along the central directions.
QVec derived_part(const RootDatum& d, const QVec& x) {
  QVec out(d.rank(), Rat(0));
  for (size_t i = 0; i < d.simple_roots().size(); ++i) {
    Rat c = dotq(d.simple_roots()[i], x);
    for (size_t t = 0; t < d.rank(); ++t) out[t] += c * d.fundamental_coweights()[i][t];
  }
  return out;
}

QVec canonical_glue_rep(const RootDatum& d, const QVec& reduced,
                        const std::vector<QVec>& glue) {
  QVec best = reduced;
  for (auto& g : glue) {
    QVec y = reduced;
    for (size_t t = 0; t < d.rank(); ++t) y[t] += g[t];
    y = reduce_to_alcove(d, y);
    if (qvec_less(y, best)) best = y;
  }
  return best;
}

i64 exact_order(const QVec& x) {
  // x lies in the coroot span, so m x is in the derived colattice
  // (= coroot span intersect Z^n) exactly when m clears all denominators.
  i64 den = 1;
  for (auto& q : x) den = mul_ck(den / gcd_i64(den, q.den), q.den);
  return den;
}

i64 adjoint_order(const RootDatum& d, const QVec& x) {
  i64 m = 1;
  for (auto& a : d.simple_roots()) {
    Rat q = dotq(a, x);
    m = mul_ck(m / gcd_i64(m, q.den), q.den);
  }
  return m;
}

}  // namespace

std::vector<i64> KacCoordinates::levels(const RootDatum& d) const {
  if (values.size() != d.components().size())
    throw std::invalid_argument("Kac coordinates do not match the component list");
  std::vector<i64> out;
  for (size_t c = 0; c < values.size(); ++c) {
    const auto& marks = d.components()[c].marks;
    if (values[c].size() != marks.size())
      throw std::invalid_argument("vector of wrong length");
    i64 m = 0;
    for (size_t i = 0; i < marks.size(); ++i) {
      if (values[c][i] < 0) throw std::invalid_argument("negative Kac coordinate");
      m = add_ck(m, mul_ck(marks[i], values[c][i]));
    }
    if (m <= 0) throw std::invalid_argument("Kac level must be positive");
    out.push_back(m);
  }
  return out;
}

TorsionPoint make_torsion_point(const RootDatum& d, const QVec& x0) {
  if (x0.size() != d.rank()) throw std::invalid_argument("vector of wrong length");
  QVec x = derived_part(d, x0);
  x = reduce_to_alcove(d, x);
  x = canonical_glue_rep(d, x, d.glue_classes());
  TorsionPoint p;
  p.datum = &d;
  p.x = x;
  p.order = exact_order(x);
  p.ad_order = adjoint_order(d, x);
  return p;
}

TorsionPoint kac_to_point(const RootDatum& d, const KacCoordinates& k) {
  std::vector<i64> levels = k.levels(d);
  QVec x(d.rank(), Rat(0));
  for (size_t c = 0; c < d.components().size(); ++c) {
    const auto& comp = d.components()[c];
    for (int i = 0; i < comp.rank; ++i) {
      Rat coeff(k.values[c][i + 1], levels[c]);
      const QVec& kappa = d.fundamental_coweights()[comp.simple_idx[i]];
      for (size_t t = 0; t < d.rank(); ++t) x[t] += coeff * kappa[t];
    }
  }
  return make_torsion_point(d, x);
}

KacCoordinates point_to_kac(const TorsionPoint& p) {
  const RootDatum& d = *p.datum;
  KacCoordinates k;
  k.central = QVec(d.rank(), Rat(0));
  for (auto& comp : d.components()) {
    i64 m = 1;
    std::vector<Rat> pair(comp.rank);
    for (int i = 0; i < comp.rank; ++i) {
      pair[i] = dotq(d.simple_roots()[comp.simple_idx[i]], p.x);
      m = mul_ck(m / gcd_i64(m, pair[i].den), pair[i].den);
    }
    Rat theta = dotq(comp.highest_root, p.x);
    m = mul_ck(m / gcd_i64(m, theta.den), theta.den);
    std::vector<i64> vals(comp.rank + 1);
    Rat s0 = (Rat(1) - theta) * Rat(m);
    vals[0] = s0.num;
    for (int i = 0; i < comp.rank; ++i) vals[i + 1] = (pair[i] * Rat(m)).num;
    k.values.push_back(vals);
  }
  return k;
}

std::vector<TorsionPoint> enumerate_torsion(const RootDatum& d, i64 m) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  // per component: tuples s >= 0 with sum marks_i s_i = m
  std::vector<std::vector<std::vector<i64>>> comp_tuples;
  for (auto& comp : d.components()) {
    std::vector<std::vector<i64>> tuples;
    std::vector<i64> cur(comp.marks.size(), 0);
    std::function<void(size_t, i64)> rec = [&](size_t i, i64 left) {
      if (i + 1 == comp.marks.size()) {
        if (left % comp.marks[i] == 0) {
          cur[i] = left / comp.marks[i];
          tuples.push_back(cur);
        }
        return;
      }
      for (i64 s = 0; s * comp.marks[i] <= left; ++s) {
        cur[i] = s;
        rec(i + 1, left - s * comp.marks[i]);
      }
    };
    rec(0, m);
    comp_tuples.push_back(tuples);
  }

  std::vector<QVec> glue = d.glue_classes();
  std::set<QVec, bool (*)(const QVec&, const QVec&)> seen(qvec_less);
  std::vector<TorsionPoint> out;

  std::vector<size_t> idx(comp_tuples.size(), 0);
  bool done = d.components().empty();
  while (!done) {
    QVec x(d.rank(), Rat(0));
    for (size_t c = 0; c < comp_tuples.size(); ++c) {
      const auto& comp = d.components()[c];
      const auto& tup = comp_tuples[c][idx[c]];
      for (int i = 0; i < comp.rank; ++i) {
        Rat coeff(tup[i + 1], m);
        const QVec& kappa = d.fundamental_coweights()[comp.simple_idx[i]];
        for (size_t t = 0; t < d.rank(); ++t) x[t] += coeff * kappa[t];
      }
    }
    QVec canon = canonical_glue_rep(d, reduce_to_alcove(d, x), glue);
    if (seen.insert(canon).second) {
      TorsionPoint p;
      p.datum = &d;
      p.x = canon;
      p.order = exact_order(canon);
      p.ad_order = adjoint_order(d, canon);
      out.push_back(p);
    }
    size_t c = 0;
    for (; c < idx.size(); ++c) {
      if (++idx[c] < comp_tuples[c].size()) break;
      idx[c] = 0;
    }
    done = (c == idx.size());
  }
  if (d.components().empty()) {
    TorsionPoint p;
    p.datum = &d;
    p.x = QVec(d.rank(), Rat(0));
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const TorsionPoint& a, const TorsionPoint& b) {
    if (a.ad_order != b.ad_order) return a.ad_order < b.ad_order;
    if (a.order != b.order) return a.order < b.order;
    return qvec_less(a.x, b.x);
  });
  return out;
}

RootDatum centralizer_subsystem(const RootDatum& d, const TorsionPoint& p) {
  // Borel-de Siebenthal: for an alcove point the integral-pairing subsystem
  // has simple system {alpha_i : <alpha_i, x> = 0} plus the lowest root of
  // each component with <theta, x> = 1.
  std::vector<IVec> sr, sc;
  for (auto& comp : d.components()) {
    for (int i = 0; i < comp.rank; ++i) {
      const IVec& a = d.simple_roots()[comp.simple_idx[i]];
      if (dotq(a, p.x).is_zero()) {
        sr.push_back(a);
        sc.push_back(d.simple_coroots()[comp.simple_idx[i]]);
      }
    }
    Rat t = dotq(comp.highest_root, p.x);
    if (t == Rat(1)) {
      sr.push_back(vneg(comp.highest_root));
      sc.push_back(vneg(comp.highest_coroot));
    }
  }
  return RootDatum::on_lattice(d.rank(), sr, sc);
}

bool is_elliptic(const RootDatum& d, const TorsionPoint& p) {
  return centralizer_subsystem(d, p).semisimple_rank() == d.semisimple_rank();
}

EigenspaceDecomposition eigenspace_decomposition(const FormalCharacter& chi,
                                                 const TorsionPoint& p) {
  if (chi.datum != p.datum) throw std::invalid_argument("mismatched root data");
  const RootDatum& d = *p.datum;
  EigenspaceDecomposition out;
  out.order = p.order;
  out.centralizer = std::make_shared<RootDatum>(centralizer_subsystem(d, p));
  for (auto& [w, mult] : chi.mults) {
    Rat q = dotq(w, p.x) * Rat(p.order);
    if (!q.is_integer())
      throw std::invalid_argument(
          "eigenvalue denominator violation: character is not a representation of this "
          "isogeny form");
    i64 k = ((q.num % p.order) + p.order) % p.order;
    auto& piece = out.pieces[k];
    piece.datum = out.centralizer.get();
    piece.mults[w] += mult;
  }
  return out;
}

FiniteAbelianGroup component_group_adjoint(const RootDatum& d, const TorsionPoint& p) {
  // adjoint normalization: every fundamental coweight lies in the cocharacter lattice
  for (auto& kappa : d.fundamental_coweights())
    if (!in_z_span(d.derived_colattice(), kappa))
      throw std::invalid_argument("non-adjoint input");

  FiniteAbelianGroup omega = d.fundamental_group();
  std::vector<QVec> stab;
  IMat coroot_rows;
  for (auto& cv : d.positive_coroots()) coroot_rows.push_back(cv);
  for (auto& g : omega.elements()) {
    QVec y = p.x;
    for (size_t t = 0; t < d.rank(); ++t) y[t] += g[t];
    if (reduce_to_alcove(d, y) == p.x) stab.push_back(g);
  }
  auto elt_order = [&](const QVec& g) {
    for (i64 k = 1; k <= 64; ++k) {
      QVec kg(g.size());
      for (size_t t = 0; t < g.size(); ++t) kg[t] = Rat(k) * g[t];
      if (in_z_span(coroot_rows, kg)) return k;
    }
    throw std::logic_error("unbounded element order");
  };
  FiniteAbelianGroup out;
  i64 size = static_cast<i64>(stab.size());
  if (size == 1) return out;
  i64 expo = 1;
  QVec maxg;
  for (auto& g : stab) {
    i64 o = elt_order(g);
    if (o > expo) {
      expo = o;
      maxg = g;
    }
  }
  if (expo == size) {
    out.invariant_factors = {size};
    out.generators = {maxg};
    return out;
  }
  if (size == 4 && expo == 2) {
    out.invariant_factors = {2, 2};
    int got = 0;
    for (auto& g : stab)
      if (elt_order(g) == 2 && got < 2) {
        out.generators.push_back(g);
        ++got;
      }
    return out;
  }
  throw std::logic_error("unrecognized component-group structure");
}

std::string torsion_table(const RootDatum& d, i64 m) {
  std::ostringstream os;
  for (auto& p : enumerate_torsion(d, m)) {
    RootDatum c = centralizer_subsystem(d, p);
    os << c.type_label() << "  order=" << p.order << "  elliptic=" << (is_elliptic(d, p) ? "yes" : "no")
       << "  kac=";
    KacCoordinates k = point_to_kac(p);
    for (size_t ci = 0; ci < k.values.size(); ++ci) {
      os << (ci ? ";" : "") << "(";
      for (size_t i = 0; i < k.values[ci].size(); ++i)
        os << (i ? "," : "") << k.values[ci][i];
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace lie
