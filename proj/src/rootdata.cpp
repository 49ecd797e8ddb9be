#include "lie/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lie {

namespace {

struct RootPair {
  IVec root, cov;
  bool operator<(const RootPair& o) const { return root < o.root; }
};

// Closure of a simple system under simple reflections, carrying coroots.
void generate_roots(const std::vector<IVec>& simples, const std::vector<IVec>& covs,
                    std::vector<IVec>& roots_out, std::vector<IVec>& covs_out) {
  std::set<RootPair> all;
  std::vector<RootPair> frontier;
  for (size_t i = 0; i < simples.size(); ++i) {
    RootPair p{simples[i], covs[i]};
    if (all.insert(p).second) frontier.push_back(p);
  }
  while (!frontier.empty()) {
    std::vector<RootPair> next;
    for (const auto& p : frontier) {
      for (size_t i = 0; i < simples.size(); ++i) {
        i64 a = dot(p.root, covs[i]);
        i64 b = dot(simples[i], p.cov);
        RootPair q{vsub(p.root, vscale(a, simples[i])), vsub(p.cov, vscale(b, covs[i]))};
        if (all.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  roots_out.clear();
  covs_out.clear();
  for (const auto& p : all) {
    roots_out.push_back(p.root);
    covs_out.push_back(p.cov);
  }
}

struct ChainInfo {
  std::vector<int> order;  // local indices into the node list, Bourbaki order
  char letter;
  int rank;
};

// Classify one connected simple system and return its Bourbaki ordering.
ChainInfo classify_component(const std::vector<int>& nodes,
                             const std::vector<IVec>& simples,
                             const std::vector<IVec>& covs) {
  int n = static_cast<int>(nodes.size());
  auto pr = [&](int i, int j) { return dot(simples[nodes[j]], covs[nodes[i]]); };
  auto lex_root = [&](int i) { return simples[nodes[i]]; };

  std::vector<std::vector<int>> adj(n);
  int triple = 0, dbl = 0;
  std::pair<int, int> dedge{-1, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      i64 w = pr(i, j) * pr(j, i);
      if (w != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        if (w == 2) {
          ++dbl;
          dedge = {i, j};
        }
        if (w == 3) {
          ++triple;
          dedge = {i, j};
        }
      }
    }

  ChainInfo info;
  info.rank = n;
  if (n == 1) {
    info.letter = 'A';
    info.order = {0};
    return info;
  }

  // longer(i,j): alpha_i strictly longer than alpha_j along an edge,
  // i.e. <alpha_i, alpha_j-check> <= -2.
  auto longer = [&](int i, int j) { return pr(j, i) <= -2; };

  if (triple) {
    info.letter = 'G';
    auto [a, b] = dedge;
    int shrt = longer(a, b) ? b : a;
    info.order = {shrt, shrt == a ? b : a};
    return info;
  }

  std::vector<int> branch;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() == 3) branch.push_back(i);
  if (branch.size() > 1) throw std::invalid_argument("unsupported shape: multiple branch nodes");

  auto walk_arm = [&](int from, int start) {
    std::vector<int> arm{start};
    int prev = from, cur = start;
    while (true) {
      int nxt = -1;
      for (int x : adj[cur])
        if (x != prev) nxt = x;
      if (nxt < 0 || adj[cur].size() > 2) break;
      prev = cur;
      cur = nxt;
      arm.push_back(cur);
    }
    return arm;
  };

  if (!branch.empty()) {
    if (dbl) throw std::invalid_argument("unsupported shape: branch with a multiple edge");
    int b = branch[0];
    std::vector<std::vector<int>> arms;
    for (int s : adj[b]) arms.push_back(walk_arm(b, s));
    std::sort(arms.begin(), arms.end(), [&](auto& x, auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return lex_root(x[0]) < lex_root(y[0]);
    });
    size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
    if (a0 == 1 && a1 == 1) {
      info.letter = 'D';  // arms (1,1,k) -> D_{k+3}
      std::vector<int> ord(arms[2].rbegin(), arms[2].rend());
      ord.push_back(b);
      int l1 = arms[0][0], l2 = arms[1][0];
      if (lex_root(l2) < lex_root(l1)) std::swap(l1, l2);
      ord.push_back(l1);
      ord.push_back(l2);
      info.order = ord;
      return info;
    }
    if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
      info.letter = 'E';
      std::vector<int> ord(n);
      ord[1] = arms[0][0];  // alpha2
      ord[3] = b;           // alpha4
      ord[2] = arms[1][0];  // alpha3 (adjacent to branch)
      ord[0] = arms[1][1];  // alpha1
      for (size_t t = 0; t < a2; ++t) ord[4 + t] = arms[2][t];
      info.order = ord;
      return info;
    }
    throw std::invalid_argument("unsupported shape: unrecognized branch pattern");
  }

  std::vector<int> ends;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() == 1) ends.push_back(i);
  if (ends.size() != 2) throw std::invalid_argument("unsupported shape: not a chain");

  if (!dbl) {
    info.letter = 'A';
    int e = (lex_root(ends[0]) < lex_root(ends[1])) ? ends[0] : ends[1];
    info.order = walk_arm(-1, e);
    return info;
  }
  if (dbl > 1) throw std::invalid_argument("unsupported shape: several multiple edges");

  auto [u, v] = dedge;
  bool u_end = adj[u].size() == 1, v_end = adj[v].size() == 1;
  if (!u_end && !v_end) {
    if (n != 4) throw std::invalid_argument("unsupported shape");
    info.letter = 'F';
    int lng_mid = longer(u, v) ? u : v;
    int shrt_mid = (lng_mid == u) ? v : u;
    int lng_end = -1, shrt_end = -1;
    for (int x : adj[lng_mid])
      if (x != shrt_mid) lng_end = x;
    for (int x : adj[shrt_mid])
      if (x != lng_mid) shrt_end = x;
    info.order = {lng_end, lng_mid, shrt_mid, shrt_end};
    return info;
  }
  int e = u_end ? u : v;
  int o = (e == u) ? v : u;
  bool end_short = longer(o, e);
  if (n == 2) {
    info.letter = 'B';  // B2 = C2, canonical order [long, short]
    info.order = end_short ? std::vector<int>{o, e} : std::vector<int>{e, o};
    return info;
  }
  info.letter = end_short ? 'B' : 'C';
  int other_end = (ends[0] == e) ? ends[1] : ends[0];
  info.order = walk_arm(-1, other_end);
  return info;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  out.push_back(cur);
  return out;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

// Row basis of the Z-span of the given rows inside Z^n.
IMat row_basis(const IMat& rows, size_t /*n*/) {
  if (rows.empty()) return {};
  SmithForm f = smith(rows);
  IMat vinv = unimodular_inverse(f.v);
  IMat basis;
  for (size_t i = 0; i < f.rank; ++i) basis.push_back(vscale(f.s[i][i], vinv[i]));
  return basis;
}

FiniteAbelianGroup quotient_structure(const IMat& sub_rows, size_t n) {
  // Structure of Z^n / rowspan_Z(sub_rows); generators are covectors g with
  // x mod rowspan determined by <x, g> mod Z.
  FiniteAbelianGroup out;
  if (sub_rows.empty()) {
    out.free_rank = static_cast<i64>(n);
    return out;
  }
  SmithForm f = smith(sub_rows);
  out.free_rank = static_cast<i64>(n - f.rank);
  for (size_t i = 0; i < f.rank; ++i) {
    i64 d = f.s[i][i];
    if (d > 1) {
      out.invariant_factors.push_back(d);
      QVec g(n, Rat(0));
      for (size_t j = 0; j < n; ++j) g[j] = Rat(f.v[j][i], d);
      out.generators.push_back(g);
    }
  }
  return out;
}

}  // namespace

IMat cartan_matrix(char letter, int rank) {
  auto chain = [&](IMat& c) {
    for (int i = 0; i + 1 < rank; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  IMat c(rank, IVec(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  switch (letter) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("unsupported shape");
      chain(c);
      return c;
    case 'B':
      if (rank < 2) throw std::invalid_argument("unsupported shape");
      chain(c);
      c[rank - 1][rank - 2] = -2;  // <alpha_{n-1}, alpha_n-check> = -2
      c[rank - 2][rank - 1] = -1;
      return c;
    case 'C':
      if (rank < 2) throw std::invalid_argument("unsupported shape");
      chain(c);
      c[rank - 1][rank - 2] = -1;
      c[rank - 2][rank - 1] = -2;  // <alpha_n, alpha_{n-1}-check> = -2
      return c;
    case 'D':
      if (rank < 3) throw std::invalid_argument("unsupported shape");
      for (int i = 0; i + 1 < rank - 1; ++i) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
      }
      c[rank - 3][rank - 1] = -1;
      c[rank - 1][rank - 3] = -1;
      return c;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("unsupported shape");
      auto link = [&](int i, int j) {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
      };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (rank >= 7) link(6, 7);
      if (rank == 8) link(7, 8);
      link(2, 4);
      return c;
    }
    case 'F':
      if (rank != 4) throw std::invalid_argument("unsupported shape");
      return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case 'G':
      if (rank != 2) throw std::invalid_argument("unsupported shape");
      return {{2, -3}, {-1, 2}};  // alpha1 short
    default:
      throw std::invalid_argument("unsupported shape");
  }
}

std::string make_type_label(std::vector<std::string> comp_labels, size_t central_rank) {
  auto key = [](const std::string& s) {
    return std::make_pair(-std::stoi(s.substr(1)), s[0]);
  };
  std::sort(comp_labels.begin(), comp_labels.end(),
            [&](const std::string& a, const std::string& b) { return key(a) < key(b); });
  std::string out;
  for (auto& s : comp_labels) {
    if (!out.empty()) out += "+";
    out += s;
  }
  if (central_rank > 0) {
    if (!out.empty()) out += "+";
    out += "T" + std::to_string(central_rank);
  }
  if (out.empty()) out = "T0";
  return out;
}

std::vector<QVec> FiniteAbelianGroup::elements() const {
  size_t n = generators.empty() ? 0 : generators[0].size();
  std::vector<QVec> out;
  std::vector<i64> idx(invariant_factors.size(), 0);
  while (true) {
    QVec v(n, Rat(0));
    for (size_t g = 0; g < generators.size(); ++g)
      for (size_t j = 0; j < n; ++j) v[j] += Rat(idx[g]) * generators[g][j];
    out.push_back(v);
    size_t g = 0;
    for (; g < idx.size(); ++g) {
      if (++idx[g] < invariant_factors[g]) break;
      idx[g] = 0;
    }
    if (g == idx.size() || idx.empty()) break;
  }
  return out;
}

void RootDatum::finish(const std::string& desc) {
  descriptor_ = desc;
  for (size_t i = 0; i < simples_.size(); ++i)
    if (dot(simples_[i], simple_covs_[i]) != 2)
      throw std::invalid_argument("root/coroot pair does not pair to 2");

  generate_roots(simples_, simple_covs_, roots_, coroots_);

  // components of the simple system, then Bourbaki reordering
  size_t k = simples_.size();
  std::vector<int> comp_of(k, -1);
  int ncomp = 0;
  for (size_t i = 0; i < k; ++i) {
    if (comp_of[i] >= 0) continue;
    std::vector<size_t> stack{i};
    comp_of[i] = ncomp;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < k; ++j)
        if (comp_of[j] < 0 && dot(simples_[j], simple_covs_[cur]) != 0) {
          comp_of[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }

  std::vector<IVec> new_simples, new_covs;
  std::vector<Component> comps;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (size_t i = 0; i < k; ++i)
      if (comp_of[i] == c) nodes.push_back(static_cast<int>(i));
    ChainInfo info = classify_component(nodes, simples_, simple_covs_);
    Component comp;
    comp.letter = info.letter;
    comp.rank = info.rank;
    for (int local : info.order) {
      comp.simple_idx.push_back(static_cast<int>(new_simples.size()));
      new_simples.push_back(simples_[nodes[local]]);
      new_covs.push_back(simple_covs_[nodes[local]]);
    }
    comps.push_back(comp);
  }
  {  // deterministic component order
    std::vector<size_t> perm(comps.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      auto ka = std::make_tuple(-comps[a].rank, comps[a].letter,
                                new_simples[comps[a].simple_idx[0]]);
      auto kb = std::make_tuple(-comps[b].rank, comps[b].letter,
                                new_simples[comps[b].simple_idx[0]]);
      return ka < kb;
    });
    std::vector<IVec> s2, c2;
    comps_.clear();
    for (size_t p : perm) {
      Component comp = comps[p];
      std::vector<int> idx2;
      for (int old : comp.simple_idx) {
        idx2.push_back(static_cast<int>(s2.size()));
        s2.push_back(new_simples[old]);
        c2.push_back(new_covs[old]);
      }
      comp.simple_idx = idx2;
      comps_.push_back(comp);
    }
    simples_ = std::move(s2);
    simple_covs_ = std::move(c2);
  }
  components_rank_ = simples_.size();

  // simple-root coordinate solver (used for positivity and marks)
  QMat sys(rank_, QVec(simples_.size(), Rat(0)));
  for (size_t j = 0; j < simples_.size(); ++j)
    for (size_t i = 0; i < rank_; ++i) sys[i][j] = Rat(simples_[j][i]);
  auto coords_of = [&](const IVec& v) -> std::optional<QVec> {
    QVec b(rank_);
    for (size_t i = 0; i < rank_; ++i) b[i] = Rat(v[i]);
    return solve_q(sys, b);
  };

  pos_roots_.clear();
  pos_covs_.clear();
  std::vector<QVec> pos_coords;
  for (size_t t = 0; t < roots_.size(); ++t) {
    auto c = coords_of(roots_[t]);
    if (!c) throw std::invalid_argument("root outside the simple-root span");
    bool pos = true, neg = true;
    for (auto& x : *c) {
      if (x < Rat(0)) pos = false;
      if (x > Rat(0)) neg = false;
    }
    if (pos == neg) throw std::invalid_argument("root is neither positive nor negative");
    if (pos) {
      pos_roots_.push_back(roots_[t]);
      pos_covs_.push_back(coroots_[t]);
      pos_coords.push_back(*c);
    }
  }
  if (2 * pos_roots_.size() != roots_.size())
    throw std::invalid_argument("roots do not come in +/- pairs");

  // highest root and affine marks per component
  for (auto& comp : comps_) {
    i64 best_h = -1;
    size_t best = 0;
    for (size_t p = 0; p < pos_roots_.size(); ++p) {
      bool in_comp = true;
      i64 h = 0;
      for (size_t j = 0; j < simples_.size(); ++j) {
        const Rat& q = pos_coords[p][j];
        if (q.is_zero()) continue;
        bool mine = std::find(comp.simple_idx.begin(), comp.simple_idx.end(),
                              static_cast<int>(j)) != comp.simple_idx.end();
        if (!mine) {
          in_comp = false;
          break;
        }
        h += q.num;  // integral for roots
      }
      if (in_comp && h > best_h) {
        best_h = h;
        best = p;
      }
    }
    comp.highest_root = pos_roots_[best];
    comp.highest_coroot = pos_covs_[best];
    comp.marks = {1};
    for (int idx : comp.simple_idx) {
      const Rat& q = pos_coords[best][idx];
      if (!q.is_integer()) throw std::invalid_argument("non-integral mark");
      comp.marks.push_back(q.num);
    }
  }

  two_rho_ = IVec(rank_, 0);
  two_rho_cov_ = IVec(rank_, 0);
  for (auto& r : pos_roots_) two_rho_ = vadd(two_rho_, r);
  for (auto& r : pos_covs_) two_rho_cov_ = vadd(two_rho_cov_, r);

  // fundamental coweights / weights
  size_t m = simples_.size();
  fund_covs_.assign(m, QVec());
  fund_wts_.assign(m, QVec());
  if (m > 0) {
    QMat pairmat(m, QVec(m, Rat(0)));   // pairmat[k][j] = <alpha_k, alpha_j-check>
    QMat pairmat_t(m, QVec(m, Rat(0)));
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) {
        pairmat[a][b] = Rat(dot(simples_[a], simple_covs_[b]));
        pairmat_t[a][b] = Rat(dot(simples_[b], simple_covs_[a]));
      }
    for (size_t i = 0; i < m; ++i) {
      QVec rhs(m, Rat(0));
      rhs[i] = Rat(1);
      auto sol = solve_q(pairmat, rhs);
      auto sol2 = solve_q(pairmat_t, rhs);
      if (!sol || !sol2) throw std::invalid_argument("degenerate Cartan pairing");
      QVec kv(rank_, Rat(0)), wv(rank_, Rat(0));
      for (size_t j = 0; j < m; ++j)
        for (size_t t = 0; t < rank_; ++t) {
          kv[t] += (*sol)[j] * Rat(simple_covs_[j][t]);
          wv[t] += (*sol2)[j] * Rat(simples_[j][t]);
        }
      fund_covs_[i] = kv;
      fund_wts_[i] = wv;
    }
  }

  derived_colattice_ = saturate(pos_covs_, rank_);

  std::vector<std::string> labels;
  for (auto& c : comps_) labels.push_back(c.label());
  type_label_ = make_type_label(labels, central_rank());
}

i64 RootDatum::bform(const IVec& x, const IVec& y) const {
  i64 s = 0;
  for (auto& g : pos_covs_) s = add_ck(s, mul_ck(dot(x, g), dot(y, g)));
  return s;
}

bool RootDatum::dominant(const IVec& w) const {
  if (w.size() != rank_) throw std::invalid_argument("vector of wrong length");
  for (auto& c : simple_covs_)
    if (dot(w, c) < 0) return false;
  return true;
}

IVec RootDatum::reflect(const IVec& w, size_t i) const {
  return vsub(w, vscale(dot(w, simple_covs_[i]), simples_[i]));
}

QVec RootDatum::reflect_cov(const QVec& x, size_t i) const {
  Rat c = dotq(simples_[i], x);
  QVec r = x;
  for (size_t t = 0; t < rank_; ++t) r[t] -= c * Rat(simple_covs_[i][t]);
  return r;
}

IVec RootDatum::dominant_rep(IVec w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < simples_.size(); ++i)
      if (dot(w, simple_covs_[i]) < 0) {
        w = reflect(w, i);
        changed = true;
      }
  }
  return w;
}

std::vector<IVec> RootDatum::weyl_orbit(const IVec& w) const {
  if (w.size() != rank_) throw std::invalid_argument("vector of wrong length");
  std::set<IVec> seen{w};
  std::vector<IVec> frontier{w};
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (auto& v : frontier)
      for (size_t i = 0; i < simples_.size(); ++i) {
        IVec u = reflect(v, i);
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return std::vector<IVec>(seen.begin(), seen.end());
}

i64 RootDatum::weyl_order() const {
  auto fact = [](i64 n) {
    i64 f = 1;
    for (i64 i = 2; i <= n; ++i) f = mul_ck(f, i);
    return f;
  };
  i64 w = 1;
  for (auto& c : comps_) {
    i64 o = 1;
    switch (c.letter) {
      case 'A': o = fact(c.rank + 1); break;
      case 'B':
      case 'C': o = mul_ck(fact(c.rank), i64(1) << c.rank); break;
      case 'D': o = mul_ck(fact(c.rank), i64(1) << (c.rank - 1)); break;
      case 'E': o = (c.rank == 6) ? 51840 : (c.rank == 7 ? 2903040 : 696729600); break;
      case 'F': o = 1152; break;
      case 'G': o = 12; break;
    }
    w = mul_ck(w, o);
  }
  return w;
}

std::optional<QVec> RootDatum::simple_root_coords(const IVec& v) const {
  if (v.size() != rank_) throw std::invalid_argument("vector of wrong length");
  QMat sys(rank_, QVec(simples_.size(), Rat(0)));
  for (size_t j = 0; j < simples_.size(); ++j)
    for (size_t i = 0; i < rank_; ++i) sys[i][j] = Rat(simples_[j][i]);
  QVec b(rank_);
  for (size_t i = 0; i < rank_; ++i) b[i] = Rat(v[i]);
  return solve_q(sys, b);
}

FiniteAbelianGroup RootDatum::center() const { return quotient_structure(roots_, rank_); }

FiniteAbelianGroup RootDatum::fundamental_group() const {
  // P-check / Q-check of the root system, generators as rational coweights.
  size_t m = simples_.size();
  FiniteAbelianGroup out;
  if (m == 0) return out;
  IMat cart(m, IVec(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) cart[i][j] = dot(simples_[j], simple_covs_[i]);
  SmithForm f = smith(cart);
  IMat vinv = unimodular_inverse(f.v);
  for (size_t i = 0; i < f.rank; ++i) {
    i64 d = f.s[i][i];
    if (d <= 1) continue;
    out.invariant_factors.push_back(d);
    QVec g(rank_, Rat(0));
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < rank_; ++t) g[t] += Rat(vinv[i][j]) * fund_covs_[j][t];
    out.generators.push_back(g);
  }
  return out;
}

std::vector<QVec> RootDatum::glue_classes() const {
  // Coset representatives of derived_colattice_ / coroot lattice.
  const IMat& L = derived_colattice_;
  if (L.empty()) return {QVec(rank_, Rat(0))};
  size_t r = L.size();
  IMat coroot_basis = row_basis(pos_covs_, rank_);
  // coordinates of the coroot basis in the L basis
  QMat sys(rank_, QVec(r, Rat(0)));
  for (size_t j = 0; j < r; ++j)
    for (size_t i = 0; i < rank_; ++i) sys[i][j] = Rat(L[j][i]);
  IMat rel;
  for (auto& q : coroot_basis) {
    QVec b(rank_);
    for (size_t i = 0; i < rank_; ++i) b[i] = Rat(q[i]);
    auto sol = solve_q(sys, b);
    if (!sol) throw std::logic_error("coroot outside derived colattice span");
    IVec row(r);
    for (size_t i = 0; i < r; ++i) {
      if (!(*sol)[i].is_integer()) throw std::logic_error("non-integral glue coordinates");
      row[i] = (*sol)[i].num;
    }
    rel.push_back(row);
  }
  SmithForm f = smith(rel);
  IMat vinv = unimodular_inverse(f.v);
  std::vector<i64> diag(r, 1);
  for (size_t i = 0; i < f.rank; ++i) diag[i] = f.s[i][i];
  std::vector<QVec> out;
  std::vector<i64> idx(r, 0);
  while (true) {
    QVec v(rank_, Rat(0));
    for (size_t i = 0; i < r; ++i) {
      if (idx[i] == 0) continue;
      for (size_t j = 0; j < r; ++j)
        for (size_t t = 0; t < rank_; ++t)
          v[t] += Rat(mul_ck(idx[i], vinv[i][j])) * Rat(L[j][t]);
    }
    out.push_back(v);
    size_t g = 0;
    for (; g < r; ++g) {
      if (++idx[g] < diag[g]) break;
      idx[g] = 0;
    }
    if (g == r) break;
  }
  return out;
}

RootDatum RootDatum::simple(char letter, int rank, bool simply_connected) {
  IMat c = cartan_matrix(letter, rank);
  RootDatum d;
  d.rank_ = rank;
  for (int j = 0; j < rank; ++j) {
    IVec root(rank, 0), cov(rank, 0);
    if (simply_connected) {
      for (int i = 0; i < rank; ++i) root[i] = c[i][j];
      cov[j] = 1;
    } else {
      root[j] = 1;
      for (int i = 0; i < rank; ++i) cov[i] = c[j][i];
    }
    d.simples_.push_back(root);
    d.simple_covs_.push_back(cov);
  }
  d.finish(std::string(1, letter) + std::to_string(rank) + (simply_connected ? "sc" : "ad"));
  return d;
}

RootDatum RootDatum::gl(int n) {
  if (n < 1) throw std::invalid_argument("unsupported shape");
  RootDatum d;
  d.rank_ = n;
  for (int i = 0; i + 1 < n; ++i) {
    IVec r(n, 0);
    r[i] = 1;
    r[i + 1] = -1;
    d.simples_.push_back(r);
    d.simple_covs_.push_back(r);
  }
  d.finish("GL" + std::to_string(n));
  return d;
}

RootDatum RootDatum::torus(int n) {
  RootDatum d;
  d.rank_ = n;
  d.finish("T" + std::to_string(n));
  return d;
}

RootDatum RootDatum::gsp(int n2) {
  if (n2 % 2 || n2 < 4) throw std::invalid_argument("unsupported shape");
  int n = n2 / 2;
  RootDatum d;  // X = Z{e_1..e_n, e_0}
  d.rank_ = n + 1;
  for (int i = 0; i + 1 < n; ++i) {
    IVec r(n + 1, 0), cv(n + 1, 0);
    r[i] = 1;
    r[i + 1] = -1;
    cv[i] = 1;
    cv[i + 1] = -1;
    d.simples_.push_back(r);
    d.simple_covs_.push_back(cv);
  }
  IVec r(n + 1, 0), cv(n + 1, 0);
  r[n - 1] = 2;
  r[n] = -1;  // 2 e_n - e_0
  cv[n - 1] = 1;
  d.simples_.push_back(r);
  d.simple_covs_.push_back(cv);
  d.finish("GSp" + std::to_string(n2));
  return d;
}

RootDatum RootDatum::gso(int n2) {
  if (n2 % 2 || n2 < 6) throw std::invalid_argument("unsupported shape");
  int n = n2 / 2;
  RootDatum d;
  d.rank_ = n + 1;
  for (int i = 0; i + 1 < n; ++i) {
    IVec r(n + 1, 0), cv(n + 1, 0);
    r[i] = 1;
    r[i + 1] = -1;
    cv[i] = 1;
    cv[i + 1] = -1;
    d.simples_.push_back(r);
    d.simple_covs_.push_back(cv);
  }
  IVec r(n + 1, 0), cv(n + 1, 0);
  r[n - 2] = 1;
  r[n - 1] = 1;
  r[n] = -1;  // e_{n-1} + e_n - e_0
  cv[n - 2] = 1;
  cv[n - 1] = 1;
  d.simples_.push_back(r);
  d.simple_covs_.push_back(cv);
  d.finish("GSO" + std::to_string(n2));
  return d;
}

RootDatum RootDatum::gspin(int n) {
  RootDatum base = (n % 2) ? gsp(n - 1) : gso(n);
  RootDatum d = base.dual();
  d.descriptor_ = "GSpin" + std::to_string(n);
  return d;
}

RootDatum RootDatum::product(const std::vector<RootDatum>& parts) {
  RootDatum d;
  size_t total = 0;
  for (auto& p : parts) total += p.rank_;
  d.rank_ = total;
  size_t off = 0;
  std::string desc;
  for (auto& p : parts) {
    for (size_t i = 0; i < p.simples_.size(); ++i) {
      IVec r(total, 0), cv(total, 0);
      for (size_t t = 0; t < p.rank_; ++t) {
        r[off + t] = p.simples_[i][t];
        cv[off + t] = p.simple_covs_[i][t];
      }
      d.simples_.push_back(r);
      d.simple_covs_.push_back(cv);
    }
    off += p.rank_;
    if (!desc.empty()) desc += "x";
    desc += p.descriptor_;
  }
  d.finish(desc);
  return d;
}

RootDatum RootDatum::dual() const {
  RootDatum d;
  d.rank_ = rank_;
  d.simples_ = simple_covs_;
  d.simple_covs_ = simples_;
  d.finish("dual(" + descriptor_ + ")");
  return d;
}

RootDatum RootDatum::quotient_lattice(const IVec& v) const {
  if (v.size() != rank_) throw std::invalid_argument("vector of wrong length");
  for (auto& cv : coroots_)
    if (dot(v, cv) != 0)
      throw std::invalid_argument("quotient vector does not pair to zero with coroots");
  SmithForm f = smith(IMat{v});
  if (f.rank != 1 || f.s[0][0] != 1)
    throw std::invalid_argument("quotient vector is not primitive");
  IMat vinv = unimodular_inverse(f.v);
  RootDatum d;
  d.rank_ = rank_ - 1;
  for (size_t i = 0; i < simples_.size(); ++i) {
    IVec r(rank_ - 1), cv(rank_ - 1);
    for (size_t c = 1; c < rank_; ++c) {
      i64 s = 0;
      for (size_t t = 0; t < rank_; ++t) s = add_ck(s, mul_ck(simples_[i][t], f.v[t][c]));
      r[c - 1] = s;
      cv[c - 1] = dot(vinv[c], simple_covs_[i]);
    }
    d.simples_.push_back(r);
    d.simple_covs_.push_back(cv);
  }
  d.finish(descriptor_ + "~");
  return d;
}

RootDatum RootDatum::quotient_by_central(const QVec& c) const {
  if (c.size() != rank_) throw std::invalid_argument("vector of wrong length");
  for (auto& r : roots_)
    if (!dotq(r, c).is_integer())
      throw std::invalid_argument("quotient by a subgroup not contained in the center");
  i64 m = 1;
  for (auto& q : c) m = mul_ck(m / gcd_i64(m, q.den), q.den);
  IVec p(rank_);
  for (size_t i = 0; i < rank_; ++i) p[i] = mul_ck(c[i].num, m / c[i].den);
  IMat a{IVec(rank_ + 1, 0)};
  for (size_t i = 0; i < rank_; ++i) a[0][i] = p[i];
  a[0][rank_] = -m;
  IMat ker = int_kernel(a, rank_ + 1);
  IMat gens;
  for (auto& row : ker) gens.push_back(IVec(row.begin(), row.begin() + rank_));
  IMat basis = row_basis(gens, rank_);
  if (basis.size() != rank_) throw std::invalid_argument("central quotient degenerates");

  QMat sys(rank_, QVec(rank_, Rat(0)));
  for (size_t j = 0; j < rank_; ++j)
    for (size_t i = 0; i < rank_; ++i) sys[i][j] = Rat(basis[j][i]);
  RootDatum d;
  d.rank_ = rank_;
  for (size_t i = 0; i < simples_.size(); ++i) {
    QVec b(rank_);
    for (size_t t = 0; t < rank_; ++t) b[t] = Rat(simples_[i][t]);
    auto sol = solve_q(sys, b);
    if (!sol) throw std::invalid_argument("root outside central-quotient lattice");
    IVec r(rank_), cv(rank_);
    for (size_t t = 0; t < rank_; ++t) {
      if (!(*sol)[t].is_integer())
        throw std::invalid_argument("root not in the central-quotient lattice");
      r[t] = (*sol)[t].num;
      cv[t] = dot(basis[t], simple_covs_[i]);
    }
    d.simples_.push_back(r);
    d.simple_covs_.push_back(cv);
  }
  d.finish(descriptor_ + "%");
  return d;
}

RootDatum RootDatum::levi(const std::vector<int>& subset) const {
  RootDatum d;
  d.rank_ = rank_;
  for (int i : subset) {
    if (i < 0 || i >= static_cast<int>(simples_.size()))
      throw std::invalid_argument("invalid subset");
    d.simples_.push_back(simples_[i]);
    d.simple_covs_.push_back(simple_covs_[i]);
  }
  d.finish(descriptor_ + ":levi");
  return d;
}

RootDatum RootDatum::on_lattice(size_t rank, std::vector<IVec> sr, std::vector<IVec> sc) {
  RootDatum d;
  d.rank_ = rank;
  d.simples_ = std::move(sr);
  d.simple_covs_ = std::move(sc);
  d.finish("sub");
  return d;
}

RootDatum RootDatum::parse(const std::string& descriptor) {
  std::string s = descriptor;
  std::vector<std::pair<char, std::string>> tails;
  while (true) {
    auto pt = s.find_last_of("~%");
    if (pt == std::string::npos) break;
    if (pt + 1 >= s.size() || s[pt + 1] != '[' || s.back() != ']')
      throw std::invalid_argument("unsupported shape: " + descriptor);
    tails.push_back({s[pt], s.substr(pt + 2, s.size() - pt - 3)});
    s = s.substr(0, pt);
  }
  std::reverse(tails.begin(), tails.end());

  std::vector<RootDatum> parts;
  for (auto& atom : split_on(s, 'x')) {
    if (atom.rfind("GSpin", 0) == 0)
      parts.push_back(gspin(std::stoi(atom.substr(5))));
    else if (atom.rfind("GSp", 0) == 0)
      parts.push_back(gsp(std::stoi(atom.substr(3))));
    else if (atom.rfind("GSO", 0) == 0)
      parts.push_back(gso(std::stoi(atom.substr(3))));
    else if (atom.rfind("GL", 0) == 0)
      parts.push_back(gl(std::stoi(atom.substr(2))));
    else if (!atom.empty() && atom[0] == 'T' && atom.size() > 1 && isdigit(atom[1]))
      parts.push_back(torus(std::stoi(atom.substr(1))));
    else if (atom.size() >= 4 && atom[0] >= 'A' && atom[0] <= 'G') {
      std::string iso = atom.substr(atom.size() - 2);
      if (iso != "sc" && iso != "ad") throw std::invalid_argument("unsupported shape: " + atom);
      int rk = std::stoi(atom.substr(1, atom.size() - 3));
      parts.push_back(simple(atom[0], rk, iso == "sc"));
    } else
      throw std::invalid_argument("unsupported shape: " + atom);
  }
  RootDatum d = parts.size() == 1 ? parts[0] : product(parts);
  for (auto& [kind, list] : tails) {
    std::vector<std::string> items = split_on(list, ',');
    if (kind == '~') {
      IVec v;
      for (auto& it : items) v.push_back(std::stoll(it));
      d = d.quotient_lattice(v);
    } else {
      QVec c;
      for (auto& it : items) c.push_back(parse_rat(it));
      d = d.quotient_by_central(c);
    }
  }
  d.descriptor_ = descriptor;
  return d;
}

// Affine Weyl reduction of a rational coweight to the fundamental alcove
// (0 <= <alpha_i, x> for simples, <theta_c, x> <= 1 per component).
QVec reduce_to_alcove(const RootDatum& d, QVec x) {
  for (int guard = 0; guard < 100000; ++guard) {
    bool moved = false;
    for (size_t i = 0; i < d.simple_roots().size(); ++i) {
      if (dotq(d.simple_roots()[i], x) < Rat(0)) {
        x = d.reflect_cov(x, i);
        moved = true;
      }
    }
    for (auto& comp : d.components()) {
      Rat t = dotq(comp.highest_root, x);
      if (t > Rat(1)) {
        Rat c = t - Rat(1);
        for (size_t j = 0; j < d.rank(); ++j) x[j] -= c * Rat(comp.highest_coroot[j]);
        moved = true;
      }
    }
    if (!moved) return x;
  }
  throw std::logic_error("alcove reduction did not terminate");
}

ExtendedDiagram extended_diagram(const RootDatum& d) {
  if (d.components().empty())
    throw std::invalid_argument("extended diagram needs a nonempty semisimple part");
  ExtendedDiagram out;
  for (auto& comp : d.components()) {
    ExtendedDiagram::ComponentDiagram cd;
    cd.type = comp.label();
    cd.marks = comp.marks;
    int n = comp.rank;
    cd.adjacency.assign(n + 1, {});
    auto root_of = [&](int node) {
      return node == 0 ? vneg(comp.highest_root) : d.simple_roots()[comp.simple_idx[node - 1]];
    };
    auto cov_of = [&](int node) {
      return node == 0 ? vneg(comp.highest_coroot)
                       : d.simple_coroots()[comp.simple_idx[node - 1]];
    };
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (i != j && dot(root_of(i), cov_of(j)) != 0) cd.adjacency[i].push_back(j);
    out.components.push_back(cd);
  }

  FiniteAbelianGroup omega = d.fundamental_group();
  for (auto& gen : omega.generators) {
    std::vector<int> perm;
    for (auto& comp : d.components()) {
      int n = comp.rank;
      std::vector<QVec> verts(n + 1, QVec(d.rank(), Rat(0)));
      for (int i = 1; i <= n; ++i) {
        const QVec& kappa = d.fundamental_coweights()[comp.simple_idx[i - 1]];
        for (size_t t = 0; t < d.rank(); ++t) verts[i][t] = kappa[t] / Rat(comp.marks[i]);
      }
      QVec gc(d.rank(), Rat(0));  // generator restricted to this component
      for (int i = 1; i <= n; ++i) {
        Rat c = dotq(d.simple_roots()[comp.simple_idx[i - 1]], gen);
        for (size_t t = 0; t < d.rank(); ++t)
          gc[t] += c * d.fundamental_coweights()[comp.simple_idx[i - 1]][t];
      }
      for (int i = 0; i <= n; ++i) {
        QVec img = verts[i];
        for (size_t t = 0; t < d.rank(); ++t) img[t] += gc[t];
        img = reduce_to_alcove(d, img);
        int found = -1;
        for (int j = 0; j <= n; ++j)
          if (img == verts[j]) found = j;
        if (found < 0) throw std::logic_error("omega action does not permute alcove vertices");
        perm.push_back(found);
      }
    }
    out.omega_action.push_back(perm);
  }
  return out;
}

}  // namespace lie
