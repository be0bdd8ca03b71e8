#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rb3lie/cochain.hpp"

namespace rb3lie {

/// Thrown when the two assembly routes for the operator coboundary disagree.
struct RouteDisagreement : std::logic_error {
  int degree;
  std::size_t row, col;
  RouteDisagreement(int n, std::size_t r, std::size_t c)
      : std::logic_error("operator coboundary routes disagree at degree " + std::to_string(n) +
                         ", entry (" + std::to_string(r) + ", " + std::to_string(c) + ")"),
        degree(n),
        row(r),
        col(c) {}
};

/// Matrix of the degree-n coboundary for the module described by a bracket
/// table (one value vector per increasing basis triple) and a rho table (one
/// m x m matrix per increasing basis pair). Degree 0 maps to zero. For n >= 1
/// the image of a coordinate cochain f on a canonical (2n+1)-slot tuple,
/// read as pairs (x_j, y_j) for j = 1..n and a last slot x_{n+1}, is
///
///   sum_{j<k} (-1)^j f(.., no j .., [x_j,y_j,x_k] ^ y_k + x_k ^ [x_j,y_j,y_k], .., x_{n+1})
/// + sum_j (-1)^j f(.., no j .., [x_j,y_j,x_{n+1}])
/// + sum_j (-1)^{j-1} rho(x_j,y_j) f(.., no j .., x_{n+1})
/// + (-1)^{n+1} ( rho(y_n,x_{n+1}) f(.., x_n) + rho(x_{n+1},x_n) f(.., y_n) ).
inline Matrix coboundary_matrix(std::size_t d, std::size_t m, int n, const std::vector<Vec>& btab,
                                const std::vector<Matrix>& rtab) {
  if (btab.size() != triple_count(d) || rtab.size() != pair_count(d))
    throw ContractViolation("coboundary_matrix: table sizes do not match the dimension");
  CochainSpace src(d, m, n), dst(d, m, n + 1);
  Matrix D(dst.dim, src.dim);
  if (n == 0) return D;

  auto bra = [&](int i, int j, int k) -> Vec {
    int a = i, b = j, c = k;
    int s = canonicalize_triple(a, b, c);
    if (s == 0) return zero_vec(d);
    Vec v = btab[triple_rank(a, b, c, d)];
    if (s < 0)
      for (auto& x : v) x = -x;
    return v;
  };

  for (std::size_t tr = 0; tr < dst.tuples; ++tr) {
    std::vector<int> ts = dst.tuple_slots(tr);
    const int z = ts[2 * n];

    // f-argument slots: pairs X_i for i != skip, the pair at position repl
    // (1-based, 0 for none) replaced by (a, b), then the last slot.
    auto make_slots = [&](int skip, int repl, int a, int b, int last) {
      std::vector<int> fs;
      fs.reserve(src.slot_count());
      for (int i = 1; i <= n; ++i) {
        if (i == skip) continue;
        if (i == repl) {
          fs.push_back(a);
          fs.push_back(b);
        } else {
          fs.push_back(ts[2 * (i - 1)]);
          fs.push_back(ts[2 * (i - 1) + 1]);
        }
      }
      fs.push_back(last);
      return fs;
    };
    auto add_scalar = [&](const Rational& c, std::vector<int> fs) {
      if (c.is_zero()) return;
      int sign = src.canonicalize(fs);
      if (sign == 0) return;
      std::size_t fr = src.tuple_rank(fs);
      Rational cc = sign > 0 ? c : Rational(-c);
      for (std::size_t t = 0; t < m; ++t) D.at(dst.coord(tr, t), src.coord(fr, t)) += cc;
    };
    auto add_matrix = [&](const Rational& c, const Matrix& L, std::vector<int> fs) {
      if (c.is_zero()) return;
      int sign = src.canonicalize(fs);
      if (sign == 0) return;
      std::size_t fr = src.tuple_rank(fs);
      Rational cc = sign > 0 ? c : Rational(-c);
      for (std::size_t to = 0; to < m; ++to)
        for (std::size_t ti = 0; ti < m; ++ti)
          if (!L.at(to, ti).is_zero()) D.at(dst.coord(tr, to), src.coord(fr, ti)) += cc * L.at(to, ti);
    };

    for (int j = 1; j <= n; ++j) {
      const int xj = ts[2 * (j - 1)], yj = ts[2 * (j - 1) + 1];
      const Rational sj(j % 2 == 0 ? 1 : -1);
      for (int k = j + 1; k <= n; ++k) {
        const int xk = ts[2 * (k - 1)], yk = ts[2 * (k - 1) + 1];
        Vec b1 = bra(xj, yj, xk);
        Vec b2 = bra(xj, yj, yk);
        for (int u = 0; u < static_cast<int>(d); ++u) {
          if (!b1[u].is_zero()) add_scalar(sj * b1[u], make_slots(j, k, u, yk, z));
          if (!b2[u].is_zero()) add_scalar(sj * b2[u], make_slots(j, k, xk, u, z));
        }
      }
      Vec bz = bra(xj, yj, z);
      for (int u = 0; u < static_cast<int>(d); ++u)
        if (!bz[u].is_zero()) add_scalar(sj * bz[u], make_slots(j, 0, 0, 0, u));
      add_matrix(-sj, rtab[pair_rank(xj, yj, d)], make_slots(j, 0, 0, 0, z));
    }
    const Rational sf((n + 1) % 2 == 0 ? 1 : -1);
    const int xn = ts[2 * (n - 1)], yn = ts[2 * (n - 1) + 1];
    add_matrix(sf, rtab[pair_rank(yn, z, d)], make_slots(n, 0, 0, 0, xn));
    add_matrix(-sf, rtab[pair_rank(xn, z, d)], make_slots(n, 0, 0, 0, yn));
  }
  return D;
}

/// Coboundary of the underlying module complex.
inline Matrix delta_matrix(const Representation& P, int n) {
  if (!P.verified || !P.algebra.verified)
    throw ContractViolation("delta_matrix: module not verified");
  return coboundary_matrix(P.algebra.dim, P.mdim, n, P.algebra.table, P.rho);
}

inline Matrix delta_matrix(const RBRepresentation& P, int n) { return delta_matrix(P.rep, n); }

namespace detail {

/// Operator coboundary assembled directly from its expanded form: the
/// descended bracket written out in operator terms, and each rho factor
/// split into its four summands
///   rho(Tx,Ty) - T_M rho(Tx,y) - T_M rho(x,Ty) - w T_M rho(x,y).
inline Matrix partial_expanded(const RBRepresentation& P, int n) {
  const std::size_t d = P.dim(), m = P.mdim();
  const Rational& w = P.weight();
  const Matrix& T = P.rb.T;
  const Matrix& TM = P.TM;
  const ThreeLieAlgebra& g = P.rep.algebra;
  CochainSpace src(d, m, n), dst(d, m, n + 1);
  Matrix D(dst.dim, src.dim);
  if (n == 0) return D;

  auto bT = [&](int i, int j, int k) -> Vec {
    Vec Ti = T.column(i), Tj = T.column(j), Tk = T.column(k);
    Vec ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
    Vec v = g.bracket(Ti, Tj, ek);
    vec_add_scaled(v, Rational(1), g.bracket(Ti, ej, Tk));
    vec_add_scaled(v, Rational(1), g.bracket(ei, Tj, Tk));
    if (!w.is_zero()) {
      vec_add_scaled(v, w, g.bracket(Ti, ej, ek));
      vec_add_scaled(v, w, g.bracket(ei, Tj, ek));
      vec_add_scaled(v, w, g.bracket(ei, ej, Tk));
      vec_add_scaled(v, w * w, g.bracket(ei, ej, ek));
    }
    return v;
  };

  for (std::size_t tr = 0; tr < dst.tuples; ++tr) {
    std::vector<int> ts = dst.tuple_slots(tr);
    const int z = ts[2 * n];

    auto make_slots = [&](int skip, int repl, int a, int b, int last) {
      std::vector<int> fs;
      fs.reserve(src.slot_count());
      for (int i = 1; i <= n; ++i) {
        if (i == skip) continue;
        if (i == repl) {
          fs.push_back(a);
          fs.push_back(b);
        } else {
          fs.push_back(ts[2 * (i - 1)]);
          fs.push_back(ts[2 * (i - 1) + 1]);
        }
      }
      fs.push_back(last);
      return fs;
    };
    auto add_scalar = [&](const Rational& c, std::vector<int> fs) {
      if (c.is_zero()) return;
      int sign = src.canonicalize(fs);
      if (sign == 0) return;
      std::size_t fr = src.tuple_rank(fs);
      Rational cc = sign > 0 ? c : Rational(-c);
      for (std::size_t t = 0; t < m; ++t) D.at(dst.coord(tr, t), src.coord(fr, t)) += cc;
    };
    auto add_matrix = [&](const Rational& c, const Matrix& L, std::vector<int> fs) {
      if (c.is_zero()) return;
      int sign = src.canonicalize(fs);
      if (sign == 0) return;
      std::size_t fr = src.tuple_rank(fs);
      Rational cc = sign > 0 ? c : Rational(-c);
      for (std::size_t to = 0; to < m; ++to)
        for (std::size_t ti = 0; ti < m; ++ti)
          if (!L.at(to, ti).is_zero()) D.at(dst.coord(tr, to), src.coord(fr, ti)) += cc * L.at(to, ti);
    };
    // rho split into its four expanded summands at a given coefficient
    auto add_rho_expanded = [&](const Rational& c, int x, int y, const std::vector<int>& fs) {
      Vec Tx = T.column(x), Ty = T.column(y);
      Vec ex = g.basis_vector(x), ey = g.basis_vector(y);
      add_matrix(c, P.rep.rho_vec(Tx, Ty), fs);
      add_matrix(-c, TM * P.rep.rho_vec(Tx, ey), fs);
      add_matrix(-c, TM * P.rep.rho_vec(ex, Ty), fs);
      if (!w.is_zero()) add_matrix(-(c * w), TM * P.rep.rho_vec(ex, ey), fs);
    };

    for (int j = 1; j <= n; ++j) {
      const int xj = ts[2 * (j - 1)], yj = ts[2 * (j - 1) + 1];
      const Rational sj(j % 2 == 0 ? 1 : -1);
      for (int k = j + 1; k <= n; ++k) {
        const int xk = ts[2 * (k - 1)], yk = ts[2 * (k - 1) + 1];
        Vec b1 = bT(xj, yj, xk);
        Vec b2 = bT(xj, yj, yk);
        for (int u = 0; u < static_cast<int>(d); ++u) {
          if (!b1[u].is_zero()) add_scalar(sj * b1[u], make_slots(j, k, u, yk, z));
          if (!b2[u].is_zero()) add_scalar(sj * b2[u], make_slots(j, k, xk, u, z));
        }
      }
      Vec bz = bT(xj, yj, z);
      for (int u = 0; u < static_cast<int>(d); ++u)
        if (!bz[u].is_zero()) add_scalar(sj * bz[u], make_slots(j, 0, 0, 0, u));
      add_rho_expanded(-sj, xj, yj, make_slots(j, 0, 0, 0, z));
    }
    const Rational sf((n + 1) % 2 == 0 ? 1 : -1);
    const int xn = ts[2 * (n - 1)], yn = ts[2 * (n - 1) + 1];
    add_rho_expanded(sf, yn, z, make_slots(n, 0, 0, 0, xn));
    add_rho_expanded(-sf, xn, z, make_slots(n, 0, 0, 0, yn));
  }
  return D;
}

}  // namespace detail

/// Coboundary of the operator complex. Assembled twice, once over the
/// descended module and once from the expanded operator form, and the two
/// results are compared entrywise before either is returned.
inline Matrix partial_matrix(const RBRepresentation& P, int n) {
  if (!P.verified || !P.rep.verified || !P.rb.verified)
    throw ContractViolation("partial_matrix: inputs not verified");
  RBRepresentation derived = derived_representation(P);
  Matrix route1 = coboundary_matrix(P.dim(), P.mdim(), n, derived.rep.algebra.table,
                                    derived.rep.rho);
  Matrix route2 = detail::partial_expanded(P, n);
  for (std::size_t r = 0; r < route1.rows; ++r)
    for (std::size_t c = 0; c < route1.cols; ++c)
      if (route1.at(r, c) != route2.at(r, c)) throw RouteDisagreement(n, r, c);
  return route1;
}

/// Comparison map from the module complex to the operator complex. Degree 0
/// is the identity; for n >= 1 and slots z_1..z_{2n-1},
///
///   (Phi f)(z) = f(Tz_1, .., Tz_{2n-1})
///              - sum over proper subsets S of the slot set of
///                  w^{(2n-2)-|S|} T_M f(w),  w_i = Tz_i if i in S, else z_i.
inline Matrix phi_matrix(const RBRepresentation& P, int n) {
  if (!P.verified || !P.rep.verified || !P.rb.verified)
    throw ContractViolation("phi_matrix: inputs not verified");
  const std::size_t d = P.dim(), m = P.mdim();
  const Rational& w = P.weight();
  const Matrix& T = P.rb.T;
  const Matrix& TM = P.TM;
  if (n == 0) return Matrix::identity(m);
  CochainSpace sp(d, m, n);
  Matrix F(sp.dim, sp.dim);
  const std::size_t slots = sp.slot_count();
  const unsigned full_exp = 2 * static_cast<unsigned>(n) - 2;

  std::vector<int> fs(slots, 0);
  for (std::size_t zr = 0; zr < sp.tuples; ++zr) {
    std::vector<int> zs = sp.tuple_slots(zr);
    // Walk every slot assignment: each slot is either left alone (mask bit
    // off) or replaced by the expansion of T on it (mask bit on).
    auto rec = [&](auto&& self, std::size_t pos, std::size_t mask_size, bool all_T,
                   const Rational& coeff) -> void {
      if (pos == slots) {
        std::vector<int> canon = fs;
        int sign = sp.canonicalize(canon);
        if (sign == 0) return;
        std::size_t fr = sp.tuple_rank(canon);
        Rational cc = sign > 0 ? coeff : Rational(-coeff);
        if (all_T) {
          for (std::size_t t = 0; t < m; ++t) F.at(sp.coord(zr, t), sp.coord(fr, t)) += cc;
        } else {
          Rational scale = -(cc * rational_pow(w, full_exp - static_cast<unsigned>(mask_size)));
          if (scale.is_zero()) return;
          for (std::size_t to = 0; to < m; ++to)
            for (std::size_t ti = 0; ti < m; ++ti)
              if (!TM.at(to, ti).is_zero())
                F.at(sp.coord(zr, to), sp.coord(fr, ti)) += scale * TM.at(to, ti);
        }
        return;
      }
      fs[pos] = zs[pos];
      self(self, pos + 1, mask_size, false, coeff);
      for (int u = 0; u < static_cast<int>(d); ++u) {
        const Rational& tval = T.at(u, zs[pos]);
        if (tval.is_zero()) continue;
        fs[pos] = u;
        self(self, pos + 1, mask_size + 1, all_T, coeff * tval);
      }
    };
    rec(rec, 0, 0, true, Rational(1));
  }
  return F;
}

/// Block differential of the combined complex. Degree 0 sends the module to
/// (0, -identity); degree n >= 1 is
///   [ delta^n      0            ]
///   [ -Phi^n       -partial^{n-1} ].
inline Matrix rba_differential(const RBRepresentation& P, int n) {
  if (n == 0) {
    const std::size_t m = P.mdim();
    CochainSpace c1(P.dim(), m, 1);
    Matrix D(c1.dim + m, m);
    D.set_block(c1.dim, 0, -Matrix::identity(m));
    return D;
  }
  Matrix top = delta_matrix(P, n);
  Matrix phi = phi_matrix(P, n);
  Matrix bottom = (n == 1) ? Matrix(CochainSpace(P.dim(), P.mdim(), 1).dim, P.mdim())
                           : partial_matrix(P, n - 1);
  Matrix D(top.rows + phi.rows, top.cols + bottom.cols);
  D.set_block(0, 0, top);
  D.set_block(top.rows, 0, -phi);
  D.set_block(top.rows, top.cols, -bottom);
  return D;
}

/// Checks Phi^{n+1} delta^n = partial^n Phi^n for n = 0..n_max.
/// Violations are single-entry degree tags.
inline VerifyResult chain_map_check(const RBRepresentation& P, int n_max) {
  VerifyResult res;
  for (int n = 0; n <= n_max; ++n) {
    Matrix lhs = phi_matrix(P, n + 1) * delta_matrix(P, n);
    Matrix partial_n = (n == 0) ? Matrix(CochainSpace(P.dim(), P.mdim(), 1).dim, P.mdim())
                                : partial_matrix(P, n);
    Matrix rhs = partial_n * phi_matrix(P, n);
    if (!(lhs == rhs)) res.add({n});
  }
  return res;
}

}  // namespace rb3lie
