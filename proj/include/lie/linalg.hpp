// Small exact linear algebra over Z and Q: Smith normal form, integer
// kernels, lattice saturation and membership. Everything here operates on
// lattices of rank <= 13, so sizes stay tiny and all arithmetic is checked.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "lie/numeric.hpp"

namespace lie {

using IVec = std::vector<i64>;
using IMat = std::vector<IVec>;  // row-major
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline i64 dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector of wrong length");
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = add_ck(s, mul_ck(a[i], b[i]));
  return s;
}

inline Rat dotq(const IVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector of wrong length");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat dotqq(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector of wrong length");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec vadd(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = add_ck(a[i], b[i]);
  return r;
}

inline IVec vsub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = sub_ck(a[i], b[i]);
  return r;
}

inline IVec vscale(i64 c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mul_ck(c, a[i]);
  return r;
}

inline IVec vneg(const IVec& a) { return vscale(-1, a); }

inline bool is_zero(const IVec& a) {
  return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

inline IMat identity_mat(size_t n) {
  IMat m(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IMat m(r, IVec(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < c; ++l) m[i][l] = add_ck(m[i][l], mul_ck(a[i][j], b[j][l]));
    }
  return m;
}

inline IVec mat_apply(const IMat& a, const IVec& v) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

struct SmithForm {
  IMat s;      // diagonal, s = u * a * v
  IMat u;      // unimodular, rows x rows
  IMat v;      // unimodular, cols x cols
  size_t rank = 0;
};

// Smith normal form with transform tracking. Classic pivot-and-reduce; sizes
// are tiny so no effort is spent on coefficient growth control beyond
// smallest-pivot selection.
inline SmithForm smith(IMat a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  SmithForm f;
  f.u = identity_mat(rows);
  f.v = identity_mat(cols);

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(f.u[i], f.u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(f.v[r][i], f.v[r][j]);
  };
  auto addrow = [&](size_t dst, size_t src, i64 c) {  // row dst += c * row src
    for (size_t k = 0; k < cols; ++k) a[dst][k] = add_ck(a[dst][k], mul_ck(c, a[src][k]));
    for (size_t k = 0; k < rows; ++k) f.u[dst][k] = add_ck(f.u[dst][k], mul_ck(c, f.u[src][k]));
  };
  auto addcol = [&](size_t dst, size_t src, i64 c) {  // col dst += c * col src
    for (size_t r = 0; r < rows; ++r) a[r][dst] = add_ck(a[r][dst], mul_ck(c, a[r][src]));
    for (size_t r = 0; r < cols; ++r) f.v[r][dst] = add_ck(f.v[r][dst], mul_ck(c, f.v[r][src]));
  };
  auto negrow = [&](size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : f.u[i]) x = -x;
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // find smallest nonzero entry in the remaining block
    size_t pi = t, pj = t;
    i64 best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) {
        addrow(i, t, -(a[i][t] / a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
    for (size_t j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) {
        addcol(j, t, -(a[t][j] / a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
    if (!clean) continue;
    // ensure divisibility of later entries by a[t][t]
    bool divides = true;
    for (size_t i = t + 1; i < rows && divides; ++i)
      for (size_t j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          addrow(t, i, 1);
          divides = false;
        }
    if (!divides) continue;
    if (a[t][t] < 0) negrow(t);
    ++t;
  }
  f.rank = t;
  f.s = a;
  return f;
}

// Basis (as rows) of { x in Z^n : a x^T = 0 }, i.e. the right integer kernel.
inline IMat int_kernel(const IMat& a, size_t cols) {
  if (a.empty()) return identity_mat(cols);
  SmithForm f = smith(a);
  IMat basis;
  for (size_t j = f.rank; j < cols; ++j) {
    IVec col(cols);
    for (size_t i = 0; i < cols; ++i) col[i] = f.v[i][j];
    basis.push_back(col);
  }
  return basis;
}

// Unimodular inverse of a square unimodular matrix.
inline IMat unimodular_inverse(const IMat& m) {
  size_t n = m.size();
  SmithForm f = smith(m);
  for (size_t i = 0; i < n; ++i)
    if (i >= f.rank || f.s[i][i] != 1) throw std::invalid_argument("matrix is not unimodular");
  // s = u m v = I  =>  m^{-1} = v u
  return mat_mul(f.v, f.u);
}

// Basis (rows) of the saturation span_Q(rows of g) intersect Z^n.
inline IMat saturate(const IMat& g, size_t /*n*/) {
  if (g.empty()) return {};
  SmithForm f = smith(g);
  IMat vinv = unimodular_inverse(f.v);
  IMat basis;
  for (size_t i = 0; i < f.rank; ++i) basis.push_back(vinv[i]);
  return basis;
}

// Does rational row vector x lie in the Z-span of the rows of g?
inline bool in_z_span(const IMat& g, const QVec& x) {
  if (g.empty()) {
    for (auto& c : x)
      if (!c.is_zero()) return false;
    return true;
  }
  SmithForm f = smith(g);
  size_t n = x.size();
  // x = y g for integer y  <=>  z := x v has z_i / s_ii in Z (i < rank), z_i = 0 after
  QVec z(n);
  for (size_t j = 0; j < n; ++j) {
    Rat s;
    for (size_t i = 0; i < n; ++i) s += x[i] * Rat(f.v[i][j]);
    z[j] = s;
  }
  for (size_t j = 0; j < n; ++j) {
    if (j < f.rank) {
      Rat q = z[j] / Rat(f.s[j][j]);
      if (!q.is_integer()) return false;
    } else if (!z[j].is_zero()) {
      return false;
    }
  }
  return true;
}

// Solve a x = b over Q (a given by rows). Returns nullopt if inconsistent.
inline std::optional<QVec> solve_q(QMat a, QVec b) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rat inv = Rat(1) / a[r][c];
    for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rat m = a[i][c];
      for (size_t k = c; k < cols; ++k) a[i][k] -= m * a[r][k];
      b[i] -= m * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  QVec x(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace lie
