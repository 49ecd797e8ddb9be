// Independent oracles used by the test suites: Weyl-character-formula weight
// multiplicities via the Kostant partition function, brute-force alcove
// enumeration for torsion classes, and direct subset-sum exterior powers.
// These deliberately avoid the library's Freudenthal / Kac code paths.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "lie/repchar.hpp"
#include "lie/rootdata.hpp"
#include "lie/torsion.hpp"

namespace oracles {

using namespace lie;

// Kostant partition function on the positive roots of d, memoized.
class KostantPartition {
 public:
  explicit KostantPartition(const RootDatum& d) : d_(d) {}

  i64 count(const IVec& v) { return rec(v, 0); }

 private:
  i64 rec(IVec v, size_t from) {
    if (is_zero(v)) return 1;
    // require v in the nonnegative span; prune by pairing with 2rho-check
    if (dot(v, d_.two_rho_cov()) < 0) return 0;
    IVec key = v;
    key.push_back(static_cast<i64>(from));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    i64 total = 0;
    for (size_t i = from; i < d_.positive_roots().size(); ++i) {
      IVec w = v;
      while (true) {
        w = vsub(w, d_.positive_roots()[i]);
        if (dot(w, d_.two_rho_cov()) < 0) break;
        total = add_ck(total, rec(w, i + 1));
        if (is_zero(w)) break;
      }
    }
    memo_[key] = total;
    return total;
  }

  const RootDatum& d_;
  std::map<IVec, i64> memo_;
};

struct SignedOrbit {
  IVec elem;
  int sign;
};

// All (w(x), det w) for x strictly dominant: BFS over simple reflections with
// length parity tracked via the number of positive roots made negative.
inline std::vector<SignedOrbit> signed_orbit(const RootDatum& d, const IVec& x) {
  std::map<IVec, int> seen;
  seen[x] = 1;
  std::vector<IVec> frontier{x};
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (auto& v : frontier) {
      int s = seen[v];
      for (size_t i = 0; i < d.simple_roots().size(); ++i) {
        IVec u = d.reflect(v, i);
        if (u == v) continue;
        if (!seen.count(u)) {
          seen[u] = -s;
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<SignedOrbit> out;
  for (auto& [v, s] : seen) out.push_back({v, s});
  return out;
}

// Weight multiplicity of mu in V(lambda) by the alternating Kostant sum:
//   m(mu) = sum_w det(w) P(w(lambda + rho) - (mu + rho)).
// Works with doubled weights to keep rho integral.
inline i64 wcf_multiplicity(const RootDatum& d, const IVec& lambda, const IVec& mu,
                            KostantPartition& kp) {
  IVec rho2 = d.two_rho();
  IVec lam2 = vadd(vscale(2, lambda), rho2);
  i64 total = 0;
  for (auto& so : signed_orbit(d, lam2)) {
    IVec diff = vsub(so.elem, vadd(vscale(2, mu), rho2));
    bool even = true;
    for (auto& c : diff)
      if (c % 2 != 0) even = false;
    if (!even) continue;
    IVec half(diff.size());
    for (size_t i = 0; i < diff.size(); ++i) half[i] = diff[i] / 2;
    total = add_ck(total, so.sign * kp.count(half));
  }
  return total;
}

// Exterior power of a multiplicity-free character by direct k-subset sums.
inline std::map<IVec, i64> subset_exterior(const std::vector<IVec>& weights, size_t k) {
  std::map<IVec, i64> out;
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t, IVec)> rec = [&](size_t pos, size_t from, IVec acc) {
    if (pos == k) {
      out[acc] += 1;
      return;
    }
    for (size_t i = from; i + (k - pos) <= weights.size(); ++i)
      rec(pos + 1, i + 1, vadd(acc, weights[i]));
  };
  rec(0, 0, IVec(weights.empty() ? 0 : weights[0].size(), 0));
  return out;
}

// Brute-force enumeration of torsion classes of adjoint order dividing m:
// scan rational coweights with denominator m in a box, reduce each to the
// alcove, identify under glue translations, and count canonical forms.
inline std::set<QVec> brute_torsion_classes(const RootDatum& d, i64 m) {
  auto qvec_less = [](const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  };
  std::vector<QVec> glue = d.glue_classes();
  auto canon = [&](QVec x) {
    x = reduce_to_alcove(d, x);
    QVec best = x;
    for (auto& g : glue) {
      QVec y = x;
      for (size_t t = 0; t < d.rank(); ++t) y[t] += g[t];
      y = reduce_to_alcove(d, y);
      if (qvec_less(y, best)) best = y;
    }
    return best;
  };
  // enumerate x = sum c_i kappa_i / m with 0 <= c_i <= m * marks-bound;
  // every alcove point with adjoint order dividing m has this shape.
  std::set<QVec> classes;
  std::vector<i64> c(d.semisimple_rank(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == c.size()) {
      QVec x(d.rank(), Rat(0));
      for (size_t j = 0; j < c.size(); ++j)
        for (size_t t = 0; t < d.rank(); ++t)
          x[t] += Rat(c[j], m) * d.fundamental_coweights()[j][t];
      // keep only alcove-compatible points (theta-pairing <= 1 handled by canon)
      classes.insert(canon(x));
      return;
    }
    for (c[i] = 0; c[i] <= m; ++c[i]) rec(i + 1);
    c[i] = 0;
  };
  rec(0);
  return classes;
}

}  // namespace oracles
