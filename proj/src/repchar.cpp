#include "lie/repchar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lie/parallel.hpp"

namespace lie {

std::string FormalCharacter::serialize() const {
  std::ostringstream os;
  for (auto& [w, m] : mults) {
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "):" << m << "\n";
  }
  return os.str();
}

namespace {
std::map<IVec, i64> freudenthal_mults(const RootDatum& d, const IVec& lambda, bool parallel);
}

std::map<IVec, i64> dominant_weight_multiplicities(const RootDatum& d, const IVec& lambda) {
  return freudenthal_mults(d, lambda, true);
}

std::map<IVec, i64> dominant_weight_multiplicities_serial(const RootDatum& d,
                                                          const IVec& lambda) {
  return freudenthal_mults(d, lambda, false);
}

namespace {
std::map<IVec, i64> freudenthal_mults(const RootDatum& d, const IVec& lambda, bool parallel) {
  if (lambda.size() != d.rank()) throw std::invalid_argument("vector of wrong length");
  if (!d.dominant(lambda)) throw std::invalid_argument("highest weight is not dominant");

  // Dominant weights mu <= lambda: mu = lambda - sum c_i alpha_i with
  // 0 <= c_i <= <lambda, kappa_i>, kappa_i the fundamental coweights.
  size_t ns = d.simple_roots().size();
  std::vector<i64> box(ns);
  for (size_t i = 0; i < ns; ++i) {
    Rat b = dotq(lambda, d.fundamental_coweights()[i]);
    box[i] = std::max<i64>(0, b.floor());
  }
  std::vector<IVec> dominants;
  std::function<void(size_t, IVec)> rec = [&](size_t i, IVec w) {
    if (i == ns) {
      if (d.dominant(w)) dominants.push_back(w);
      return;
    }
    for (i64 t = 0; t <= box[i]; ++t) {
      rec(i + 1, w);
      w = vsub(w, d.simple_roots()[i]);
    }
  };
  rec(0, lambda);

  // height of lambda - mu, for processing order
  auto drop_height = [&](const IVec& mu) {
    auto cc = d.simple_root_coords(vsub(lambda, mu));
    i64 h = 0;
    for (auto& q : *cc) h = add_ck(h, q.floor());
    return h;
  };
  std::sort(dominants.begin(), dominants.end(), [&](const IVec& a, const IVec& b) {
    i64 ha = drop_height(a), hb = drop_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<IVec, i64> mult;
  mult[lambda] = 1;
  const auto& pos_roots = d.positive_roots();
  IVec two_rho = d.two_rho();

  for (size_t di = 1; di < dominants.size(); ++di) {
    const IVec& mu = dominants[di];
    // Freudenthal: m(mu) * (B(lam,lam) - B(mu,mu) + B(2rho, lam - mu))
    //            = 2 * sum_{alpha>0} sum_{k>=1} m(mu + k alpha) B(mu + k alpha, alpha)
    i64 denom = add_ck(sub_ck(d.bform(lambda, lambda), d.bform(mu, mu)),
                       d.bform(two_rho, vsub(lambda, mu)));
    if (denom == 0) continue;  // mu not a weight (would have mult 0)

    std::vector<i64> partial(pos_roots.size(), 0);
    auto string_sum = [&](std::ptrdiff_t a) {
      const IVec& alpha = pos_roots[a];
      i64 acc = 0;
      IVec nu = mu;
      while (true) {
        nu = vadd(nu, alpha);
        IVec rep = d.dominant_rep(nu);
        auto it = mult.find(rep);
        if (it == mult.end()) break;
        acc = add_ck(acc, mul_ck(it->second, d.bform(nu, alpha)));
      }
      partial[a] = acc;
    };
    if (parallel)
      par_for(static_cast<std::ptrdiff_t>(pos_roots.size()), string_sum);
    else
      for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(pos_roots.size()); ++a)
        string_sum(a);
    i64 num = 0;
    for (i64 p : partial) num = add_ck(num, p);
    num = mul_ck(2, num);
    if (num % denom != 0) throw std::logic_error("non-integral weight multiplicity");
    i64 m = num / denom;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}
}  // namespace

FormalCharacter irrep_character(const RootDatum& d, const IVec& lambda) {
  auto dom = dominant_weight_multiplicities(d, lambda);
  FormalCharacter chi;
  chi.datum = &d;
  for (auto& [mu, m] : dom)
    for (auto& w : d.weyl_orbit(mu)) chi.mults[w] = m;
  return chi;
}

i64 dim_weyl(const RootDatum& d, const IVec& lambda) {
  if (!d.dominant(lambda)) throw std::invalid_argument("highest weight is not dominant");
  FactoredProduct p;
  for (auto& gamma : d.positive_coroots()) {
    i64 rho_g = dot(d.two_rho(), gamma);  // <2rho, gamma>
    p.mul(add_ck(mul_ck(2, dot(lambda, gamma)), rho_g));
    p.div(rho_g);
  }
  return p.value();
}

FormalCharacter trivial_character(const RootDatum& d) {
  FormalCharacter chi;
  chi.datum = &d;
  chi.mults[IVec(d.rank(), 0)] = 1;
  return chi;
}

FormalCharacter tensor_serial(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.datum != b.datum) throw std::invalid_argument("mismatched root data");
  FormalCharacter out;
  out.datum = a.datum;
  for (auto& [wa, ma] : a.mults)
    for (auto& [wb, mb] : b.mults) out.mults[vadd(wa, wb)] += mul_ck(ma, mb);
  return out;
}

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.datum != b.datum) throw std::invalid_argument("mismatched root data");
  std::vector<std::pair<IVec, i64>> left(a.mults.begin(), a.mults.end());
  int nt = max_threads();
  std::vector<std::map<IVec, i64>> partial(nt);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(left.size()); ++i) {
    auto& local = partial[thread_id()];
    for (auto& [wb, mb] : b.mults) local[vadd(left[i].first, wb)] += mul_ck(left[i].second, mb);
  }
  FormalCharacter out;
  out.datum = a.datum;
  for (auto& part : partial)
    for (auto& [w, m] : part) out.mults[w] += m;
  return out;
}

FormalCharacter dual(const FormalCharacter& chi) {
  FormalCharacter out;
  out.datum = chi.datum;
  for (auto& [w, m] : chi.mults) out.mults[vneg(w)] = m;
  return out;
}

FormalCharacter exterior_power(const FormalCharacter& chi, i64 k) {
  if (k < 0 || k > chi.dim()) throw std::invalid_argument("exterior power out of range");
  const RootDatum& d = *chi.datum;
  // Adams operations psi^j (weights scaled by j) and Newton's identity
  //   k e_k = sum_{j=1}^{k} (-1)^{j-1} psi^j * e_{k-j}.
  std::vector<std::map<IVec, i64>> psi(k + 1);
  for (i64 j = 1; j <= k; ++j)
    for (auto& [w, m] : chi.mults) psi[j][vscale(j, w)] += m;
  std::vector<std::map<IVec, i64>> e(k + 1);
  e[0][IVec(d.rank(), 0)] = 1;
  for (i64 n = 1; n <= k; ++n) {
    std::map<IVec, i64> acc;
    for (i64 j = 1; j <= n; ++j) {
      i64 sign = (j % 2 == 1) ? 1 : -1;
      for (auto& [wp, mp] : psi[j])
        for (auto& [we, me] : e[n - j]) acc[vadd(wp, we)] += sign * mul_ck(mp, me);
    }
    for (auto& [w, m] : acc) {
      if (m % n != 0) throw std::logic_error("Newton identity division failed");
      i64 q = m / n;
      if (q != 0) e[n][w] = q;
    }
    for (auto& [w, m] : e[n])
      if (m < 0) throw std::logic_error("negative exterior-power multiplicity");
  }
  FormalCharacter out;
  out.datum = chi.datum;
  out.mults = std::move(e[k]);
  return out;
}

std::vector<std::pair<IVec, i64>> decompose(const FormalCharacter& chi) {
  const RootDatum& d = *chi.datum;
  std::map<IVec, i64> rest = chi.mults;
  std::vector<std::pair<IVec, i64>> out;
  auto pair_key = [&](const IVec& w) {
    IVec key;
    for (auto& cv : d.simple_coroots()) key.push_back(dot(w, cv));
    key.insert(key.end(), w.begin(), w.end());
    return key;
  };
  while (!rest.empty()) {
    // Pick a weight maximizing <w, 2rho-check>; the pairing is strictly
    // positive on positive roots, so the argmax is maximal in the root order.
    // Ties break by pairing-vector lex order for determinism.
    const IVec* best = nullptr;
    i64 best_h = 0;
    IVec best_key;
    for (auto& [w, m] : rest) {
      if (m == 0) continue;
      i64 h = dot(w, d.two_rho_cov());
      IVec key = pair_key(w);
      if (!best || h > best_h || (h == best_h && key > best_key)) {
        best = &w;
        best_h = h;
        best_key = key;
      }
    }
    if (!best) throw NotACharacter("no maximal weight found");
    IVec hw = *best;
    i64 mult = rest[hw];
    if (!d.dominant(hw) || mult < 0) throw NotACharacter("support is not a character");
    FormalCharacter piece = irrep_character(d, hw);
    for (auto& [w, m] : piece.mults) {
      auto it = rest.find(w);
      i64 have = (it == rest.end()) ? 0 : it->second;
      i64 next = sub_ck(have, mul_ck(mult, m));
      if (next < 0) throw NotACharacter("irreducible subtraction went negative");
      if (next == 0) {
        if (it != rest.end()) rest.erase(it);
      } else
        rest[w] = next;
    }
    out.push_back({hw, mult});
  }
  return out;
}

int fs_indicator(const RootDatum& d, const IVec& lambda) {
  if (!d.dominant(lambda)) throw std::invalid_argument("highest weight is not dominant");
  IVec dual_hw = d.dominant_rep(vneg(lambda));
  if (dual_hw != lambda) return 0;
  i64 p = dot(lambda, d.two_rho_cov());
  return (p % 2 == 0) ? 1 : -1;
}

bool symplectic_type(const RootDatum& d,
                     const std::vector<std::pair<IVec, i64>>& constituents) {
  std::map<IVec, i64> bag;
  for (auto& [hw, m] : constituents) bag[hw] += m;
  for (auto& [hw, m] : bag) {
    if (m == 0) continue;
    int fs = fs_indicator(d, hw);
    if (fs == -1) continue;
    if (fs == +1) return false;  // orthogonal self-dual constituent
    IVec dual_hw = d.dominant_rep(vneg(hw));
    auto it = bag.find(dual_hw);
    if (it == bag.end() || it->second != m) return false;
  }
  return true;
}

}  // namespace lie
