#pragma once

#include <vector>

#include "rb3lie/rota_baxter.hpp"

namespace rb3lie {

/// A module (M, rho) over a 3-Lie algebra: one m x m matrix per strictly
/// increasing basis pair, extended skewly to arbitrary pairs.
struct Representation {
  ThreeLieAlgebra algebra;
  std::size_t mdim = 0;
  std::vector<Matrix> rho;  // pair_count(algebra.dim) matrices, each mdim x mdim
  bool verified = false;

  const Matrix& rho_pair(std::size_t pr) const { return rho[pr]; }

  /// rho(e_i, e_j) for arbitrary index order (materializes the sign).
  Matrix rho_of(int i, int j) const {
    if (i == j) return Matrix::zero(mdim, mdim);
    if (i < j) return rho[pair_rank(i, j, algebra.dim)];
    return -rho[pair_rank(j, i, algebra.dim)];
  }

  /// Bilinear extension of rho to coordinate vectors.
  Matrix rho_vec(const Vec& x, const Vec& y) const {
    Matrix out(mdim, mdim);
    for (int i = 0; i < static_cast<int>(algebra.dim); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < static_cast<int>(algebra.dim); ++j) {
        if (i == j || y[j].is_zero()) continue;
        Rational c = x[i] * y[j];
        std::size_t pr = pair_rank(std::min(i, j), std::max(i, j), algebra.dim);
        if (i > j) c = -c;
        const Matrix& R = rho[pr];
        for (std::size_t t = 0; t < out.a.size(); ++t) out.a[t] += c * R.a[t];
      }
    }
    return out;
  }
};

/// The adjoint module: rho(x, y) = [x, y, -] on the algebra itself.
inline Representation adjoint_representation(const ThreeLieAlgebra& g) {
  if (!g.verified) throw ContractViolation("adjoint_representation: algebra not verified");
  Representation P;
  P.algebra = g;
  P.mdim = g.dim;
  P.rho.assign(pair_count(g.dim), Matrix(g.dim, g.dim));
  for_each_pair(g.dim, [&](int i, int j) {
    Matrix& R = P.rho[pair_rank(i, j, g.dim)];
    for (int k = 0; k < static_cast<int>(g.dim); ++k) {
      Vec col = g.bracket_basis(i, j, k);
      for (std::size_t t = 0; t < g.dim; ++t) R.at(t, k) = col[t];
    }
  });
  return P;
}

/// Checks both module identities:
///   rho(x1,x2) rho(x3,x4) = rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4]) + rho(x3,x4) rho(x1,x2)
///   rho(x1,[x2,x3,x4])    = rho(x3,x4) rho(x1,x2) - rho(x2,x4) rho(x1,x3) + rho(x2,x3) rho(x1,x4)
/// Violations carry a leading tag: 1 for the first identity (then x1<x2, x3<x4),
/// 2 for the second (then x1 arbitrary, x2<x3<x4). Skewness of both sides makes
/// the reduced tuple sets exhaustive.
inline VerifyResult verify_representation(const Representation& P) {
  VerifyResult res;
  const ThreeLieAlgebra& g = P.algebra;
  const int d = static_cast<int>(g.dim);
  auto rho_bracket_right = [&](int a, const Vec& w) {
    // rho(e_a, w) for a vector second argument
    Matrix out(P.mdim, P.mdim);
    for (int u = 0; u < d; ++u) {
      if (u == a || w[u].is_zero()) continue;
      Matrix R = P.rho_of(a, u);
      for (std::size_t t = 0; t < out.a.size(); ++t) out.a[t] += w[u] * R.a[t];
    }
    return out;
  };
  for_each_pair(d, [&](int x1, int x2) {
    for_each_pair(d, [&](int x3, int x4) {
      Matrix lhs = P.rho_of(x1, x2) * P.rho_of(x3, x4);
      Matrix rhs = P.rho_of(x3, x4) * P.rho_of(x1, x2);
      Vec b123 = g.bracket_basis(x1, x2, x3);
      Vec b124 = g.bracket_basis(x1, x2, x4);
      for (int u = 0; u < d; ++u) {
        if (!b123[u].is_zero()) {
          Matrix R = P.rho_of(u, x4);
          for (std::size_t t = 0; t < rhs.a.size(); ++t) rhs.a[t] += b123[u] * R.a[t];
        }
        if (!b124[u].is_zero()) {
          Matrix R = P.rho_of(x3, u);
          for (std::size_t t = 0; t < rhs.a.size(); ++t) rhs.a[t] += b124[u] * R.a[t];
        }
      }
      if (!(lhs == rhs)) res.add({1, x1, x2, x3, x4});
    });
  });
  for (int x1 = 0; x1 < d; ++x1) {
    for_each_triple(d, [&](int x2, int x3, int x4) {
      Matrix lhs = rho_bracket_right(x1, g.bracket_basis(x2, x3, x4));
      Matrix rhs = P.rho_of(x3, x4) * P.rho_of(x1, x2);
      Matrix t2 = P.rho_of(x2, x4) * P.rho_of(x1, x3);
      Matrix t3 = P.rho_of(x2, x3) * P.rho_of(x1, x4);
      for (std::size_t t = 0; t < rhs.a.size(); ++t) rhs.a[t] += t3.a[t] - t2.a[t];
      if (!(lhs == rhs)) res.add({2, x1, x2, x3, x4});
    });
  }
  return res;
}

/// Module with a compatible operator T_M over a Rota-Baxter structure.
struct RBRepresentation {
  Representation rep;
  Matrix TM;  // mdim x mdim
  RotaBaxterStructure rb;
  bool verified = false;

  std::size_t dim() const { return rep.algebra.dim; }
  std::size_t mdim() const { return rep.mdim; }
  const Rational& weight() const { return rb.weight; }
};

/// Compatibility law between T and T_M, as an identity of m x m matrices per
/// strictly increasing basis pair (x, y):
///   rho(Tx,Ty) T_M = T_M ( rho(Tx,Ty) + rho(Tx,y) T_M + rho(x,Ty) T_M
///                          + w rho(Tx,y) + w rho(x,Ty) + w rho(x,y) T_M + w^2 rho(x,y) ).
/// Violations are (x, y, m-column) triples.
inline VerifyResult verify_rb_representation(const RBRepresentation& P) {
  VerifyResult res;
  const int d = static_cast<int>(P.dim());
  const Rational& w = P.weight();
  const Matrix& T = P.rb.T;
  const Matrix& TM = P.TM;
  if (TM.rows != P.mdim() || TM.cols != P.mdim())
    throw ContractViolation("verify_rb_representation: T_M shape mismatch");
  for_each_pair(d, [&](int x, int y) {
    Vec Tx = T.column(x), Ty = T.column(y);
    Vec ex = P.rep.algebra.basis_vector(x), ey = P.rep.algebra.basis_vector(y);
    Matrix rTT = P.rep.rho_vec(Tx, Ty);
    Matrix rTy = P.rep.rho_vec(Tx, ey);
    Matrix rxT = P.rep.rho_vec(ex, Ty);
    Matrix rxy = P.rep.rho_of(x, y);
    Matrix lhs = rTT * TM;
    Matrix inner = rTT + rTy * TM + rxT * TM + w * rTy + w * rxT + w * (rxy * TM) + (w * w) * rxy;
    Matrix rhs = TM * inner;
    if (!(lhs == rhs)) {
      for (std::size_t c = 0; c < P.mdim(); ++c) {
        bool col_bad = false;
        for (std::size_t r = 0; r < P.mdim(); ++r)
          if (lhs.at(r, c) != rhs.at(r, c)) col_bad = true;
        if (col_bad) res.add({x, y, static_cast<int>(c)});
      }
    }
  });
  return res;
}

/// The algebra acting on itself, with T_M = T.
inline RBRepresentation regular_representation(const RotaBaxterStructure& R) {
  if (!R.verified) throw ContractViolation("regular_representation: structure not verified");
  RotaBaxterStructure base = R;
  base.algebra.verified = true;  // implied by the structure-level flag
  RBRepresentation P;
  P.rep = adjoint_representation(base.algebra);
  P.rep.verified = true;  // module identities follow from the fundamental identity
  P.TM = base.T;
  P.rb = base;
  P.verified = true;  // compatibility law is the weighted relation itself
  return P;
}

/// Semidirect sum: bracket on g + M given by
///   [x+u, y+v, z+w] = [x,y,z] + rho(x,y)w + rho(y,z)u + rho(z,x)v,
/// operator T + T_M, same weight. Computed on the concatenated basis
/// (algebra slots first, then module slots).
inline RotaBaxterStructure semidirect_product(const RBRepresentation& P) {
  if (!P.verified || !P.rep.verified || !P.rb.verified)
    throw ContractViolation("semidirect_product: inputs not verified");
  const std::size_t d = P.dim(), m = P.mdim(), n = d + m;
  RotaBaxterStructure out;
  out.algebra = ThreeLieAlgebra::abelian(n);
  for_each_triple(n, [&](int i, int j, int k) {
    int in_g = (i < static_cast<int>(d)) + (j < static_cast<int>(d)) + (k < static_cast<int>(d));
    Vec v = zero_vec(n);
    if (in_g == 3) {
      Vec b = P.rep.algebra.bracket_basis(i, j, k);
      for (std::size_t t = 0; t < d; ++t) v[t] = b[t];
    } else if (in_g == 2) {
      // i < j < k with k in the module block: value = rho(e_i, e_j) m_k
      Vec col = P.rep.rho_of(i, j).column(k - d);
      for (std::size_t t = 0; t < m; ++t) v[d + t] = col[t];
    }
    out.algebra.table[triple_rank(i, j, k, n)] = std::move(v);
  });
  out.T = Matrix(n, n);
  out.T.set_block(0, 0, P.rb.T);
  out.T.set_block(d, d, P.TM);
  out.weight = P.weight();
  return out;
}

/// Block-diagonal sum of two modules over the same base structure.
inline RBRepresentation direct_sum_representations(const RBRepresentation& A,
                                                   const RBRepresentation& B) {
  if (!A.verified || !B.verified)
    throw ContractViolation("direct_sum_representations: inputs not verified");
  if (A.dim() != B.dim() || !(A.rb.T == B.rb.T) || A.weight() != B.weight())
    throw ContractViolation("direct_sum_representations: bases differ");
  RBRepresentation out;
  out.rep.algebra = A.rep.algebra;
  out.rep.mdim = A.mdim() + B.mdim();
  out.rep.rho.assign(pair_count(A.dim()), Matrix(out.rep.mdim, out.rep.mdim));
  for (std::size_t pr = 0; pr < out.rep.rho.size(); ++pr) {
    out.rep.rho[pr].set_block(0, 0, A.rep.rho[pr]);
    out.rep.rho[pr].set_block(A.mdim(), A.mdim(), B.rep.rho[pr]);
  }
  out.rep.verified = true;
  out.TM = Matrix(out.rep.mdim, out.rep.mdim);
  out.TM.set_block(0, 0, A.TM);
  out.TM.set_block(A.mdim(), A.mdim(), B.TM);
  out.rb = A.rb;
  out.verified = true;
  return out;
}

/// Derived module over the derived bracket:
///   rho_T(x,y) = rho(Tx,Ty) - T_M ( rho(Tx,y) + rho(x,Ty) + w rho(x,y) ).
/// Returns a full RBRepresentation over (g_T, T, w).
inline RBRepresentation derived_representation(const RBRepresentation& P) {
  if (!P.verified || !P.rep.verified || !P.rb.verified)
    throw ContractViolation("derived_representation: inputs not verified");
  const std::size_t d = P.dim();
  const Rational& w = P.weight();
  RBRepresentation out;
  out.rep.algebra = derived_bracket(P.rb);
  out.rep.algebra.verified = true;  // closure of a verified structure
  out.rep.mdim = P.mdim();
  out.rep.rho.assign(pair_count(d), Matrix(P.mdim(), P.mdim()));
  for_each_pair(d, [&](int i, int j) {
    Vec Ti = P.rb.T.column(i), Tj = P.rb.T.column(j);
    Vec ei = P.rep.algebra.basis_vector(i), ej = P.rep.algebra.basis_vector(j);
    Matrix inner = P.rep.rho_vec(Ti, ej) + P.rep.rho_vec(ei, Tj) + w * P.rep.rho_of(i, j);
    out.rep.rho[pair_rank(i, j, d)] = P.rep.rho_vec(Ti, Tj) - P.TM * inner;
  });
  out.rep.verified = true;
  out.TM = P.TM;
  out.rb.algebra = out.rep.algebra;
  out.rb.T = P.rb.T;
  out.rb.weight = w;
  out.rb.verified = true;
  out.verified = true;
  return out;
}

}  // namespace rb3lie
