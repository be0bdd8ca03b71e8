#pragma once

#include <utility>
#include <vector>

#include "rb3lie/cohomology.hpp"

namespace rb3lie {

/// Candidate classifying data for an abelian extension: a skew trilinear map
/// into the module (stored on increasing triples) and a linear map g -> M.
/// Cocycle status is a verdict, not an invariant.
struct ExtensionCocycle {
  std::size_t d = 0, m = 0;
  std::vector<Vec> psi;  // triple_count(d) entries, each of length m
  Matrix chi;            // m x d

  static ExtensionCocycle zero(std::size_t d, std::size_t m) {
    ExtensionCocycle c;
    c.d = d;
    c.m = m;
    c.psi.assign(triple_count(d), zero_vec(m));
    c.chi = Matrix(m, d);
    return c;
  }
};

/// Coordinates of (psi, chi) in the degree-2 basis of the combined complex.
inline Vec embed_extension_cocycle(const ExtensionCocycle& c) {
  CochainSpace c2(c.d, c.m, 2);
  Vec out = zero_vec(c2.dim + c.d * c.m);
  for (std::size_t tr = 0; tr < triple_count(c.d); ++tr)
    for (std::size_t t = 0; t < c.m; ++t) out[tr * c.m + t] = c.psi[tr][t];
  for (std::size_t z = 0; z < c.d; ++z)
    for (std::size_t t = 0; t < c.m; ++t) out[c2.dim + z * c.m + t] = c.chi.at(t, z);
  return out;
}

inline ExtensionCocycle split_extension_cocycle(std::size_t d, std::size_t m, const Vec& coords) {
  ExtensionCocycle c = ExtensionCocycle::zero(d, m);
  CochainSpace c2(d, m, 2);
  for (std::size_t tr = 0; tr < triple_count(d); ++tr)
    for (std::size_t t = 0; t < m; ++t) c.psi[tr][t] = coords[tr * m + t];
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t t = 0; t < m; ++t) c.chi.at(t, z) = coords[c2.dim + z * m + t];
  return c;
}

/// Extension of a base structure by its module, in split coordinates
/// (algebra slots first, then module slots). `inclusion` acts M -> total and
/// `projection` acts total -> g, so p i = 0 and the fiber bracket vanishes
/// structurally.
struct AbelianExtension {
  RotaBaxterStructure total;
  RotaBaxterStructure base;
  Matrix inclusion;   // (d+m) x m
  Matrix projection;  // d x (d+m)
  Matrix TM;          // m x m, the fiber operator
  bool valid = false;
};

struct BuildResult {
  AbelianExtension extension;
  bool valid = false;  // total passes both structure verifiers
};

/// Builds g + M with
///   [x+u, y+v, z+w] = [x,y,z] + rho(x,y)w + rho(y,z)u + rho(z,x)v + psi(x,y,z)
///   T(x+u) = T(x) + chi(x) + T_M(u)
/// and compares the structural verdict with the degree-2 cocycle condition;
/// the two must agree (they are asserted equal before returning).
inline BuildResult build_extension(const RBRepresentation& P, const ExtensionCocycle& c) {
  if (!P.verified || !P.rep.verified || !P.rb.verified)
    throw ContractViolation("build_extension: inputs not verified");
  const std::size_t d = P.dim(), m = P.mdim(), n = d + m;
  if (c.d != d || c.m != m) throw ContractViolation("build_extension: cocycle shape mismatch");

  BuildResult out;
  AbelianExtension& E = out.extension;
  E.base = P.rb;
  E.TM = P.TM;
  E.total.algebra = ThreeLieAlgebra::abelian(n);
  for_each_triple(n, [&](int i, int j, int k) {
    int in_g = (i < static_cast<int>(d)) + (j < static_cast<int>(d)) + (k < static_cast<int>(d));
    Vec v = zero_vec(n);
    if (in_g == 3) {
      Vec b = P.rep.algebra.bracket_basis(i, j, k);
      for (std::size_t t = 0; t < d; ++t) v[t] = b[t];
      const Vec& ps = c.psi[triple_rank(i, j, k, d)];
      for (std::size_t t = 0; t < m; ++t) v[d + t] = ps[t];
    } else if (in_g == 2) {
      Vec col = P.rep.rho_of(i, j).column(k - d);
      for (std::size_t t = 0; t < m; ++t) v[d + t] = col[t];
    }
    E.total.algebra.table[triple_rank(i, j, k, n)] = std::move(v);
  });
  E.total.T = Matrix(n, n);
  E.total.T.set_block(0, 0, P.rb.T);
  E.total.T.set_block(d, 0, c.chi);
  E.total.T.set_block(d, d, P.TM);
  E.total.weight = P.weight();
  E.inclusion = Matrix(n, m);
  E.inclusion.set_block(d, 0, Matrix::identity(m));
  E.projection = Matrix(d, n);
  E.projection.set_block(0, 0, Matrix::identity(d));

  bool structural = verify_fundamental_identity(E.total.algebra).ok &&
                    verify_rota_baxter(E.total).ok;
  bool cocycle = vec_is_zero(mat_apply(rba_differential(P, 2), embed_extension_cocycle(c)));
  if (structural != cocycle)
    throw ContractViolation("build_extension: structural verdict disagrees with the cocycle condition");
  E.total.algebra.verified = structural;
  E.total.verified = structural;
  E.valid = structural;
  out.valid = structural;
  return out;
}

/// Right inverse of the projection, as a (d+m) x d matrix with p s = id.
struct Section {
  Matrix s;

  static Section canonical(std::size_t d, std::size_t m) {
    Section sec;
    sec.s = Matrix(d + m, d);
    sec.s.set_block(0, 0, Matrix::identity(d));
    return sec;
  }
};

struct ExtractResult {
  ExtensionCocycle cocycle;
  RBRepresentation induced;
};

/// Recovers the classifying data through a section:
///   psi(x,y,z) = [s x, s y, s z] - s([x,y,z]),  chi(x) = T(s x) - s(T x),
///   rho(x,y) u = [s x, s y, i u],
/// asserting that psi and chi land in the fiber, that the induced action is
/// a valid module with operator T_M, and that (psi, chi) is a cocycle.
inline ExtractResult extract_cocycle(const AbelianExtension& E, const Section& sec) {
  if (!E.valid) throw ContractViolation("extract_cocycle: extension not valid");
  const std::size_t d = E.base.algebra.dim, m = E.inclusion.cols, n = d + m;
  const Matrix& s = sec.s;
  if (s.rows != n || s.cols != d) throw ContractViolation("extract_cocycle: section shape mismatch");
  if (!(E.projection * s == Matrix::identity(d)))
    throw ContractViolation("extract_cocycle: not a section of the projection");

  auto fiber_part = [&](const Vec& v) {
    // Split coordinates: assert the g-part vanishes, return the M-part.
    Vec out = zero_vec(m);
    for (std::size_t t = 0; t < d; ++t)
      if (!v[t].is_zero()) throw ContractViolation("extract_cocycle: value leaves the fiber");
    for (std::size_t t = 0; t < m; ++t) out[t] = v[d + t];
    return out;
  };
  auto svec = [&](int i) { return s.column(i); };

  ExtractResult out;
  out.cocycle = ExtensionCocycle::zero(d, m);
  for_each_triple(d, [&](int i, int j, int k) {
    Vec v = E.total.algebra.bracket(svec(i), svec(j), svec(k));
    Vec base = E.base.algebra.bracket_basis(i, j, k);
    vec_add_scaled(v, Rational(-1), mat_apply(s, base));
    out.cocycle.psi[triple_rank(i, j, k, d)] = fiber_part(v);
  });
  out.cocycle.d = d;
  out.cocycle.m = m;
  out.cocycle.chi = Matrix(m, d);
  for (std::size_t x = 0; x < d; ++x) {
    Vec v = mat_apply(E.total.T, svec(static_cast<int>(x)));
    vec_add_scaled(v, Rational(-1), mat_apply(s, E.base.T.column(x)));
    Vec col = fiber_part(v);
    for (std::size_t t = 0; t < m; ++t) out.cocycle.chi.at(t, x) = col[t];
  }

  out.induced.rep.algebra = E.base.algebra;
  out.induced.rep.algebra.verified = true;  // base of a valid extension
  out.induced.rep.mdim = m;
  out.induced.rep.rho.assign(pair_count(d), Matrix(m, m));
  for_each_pair(d, [&](int i, int j) {
    Matrix& R = out.induced.rep.rho[pair_rank(i, j, d)];
    for (std::size_t u = 0; u < m; ++u) {
      Vec col = fiber_part(E.total.algebra.bracket(svec(i), svec(j), E.inclusion.column(u)));
      for (std::size_t t = 0; t < m; ++t) R.at(t, u) = col[t];
    }
  });
  out.induced.TM = E.TM;
  out.induced.rb = E.base;
  out.induced.rb.verified = true;
  if (!verify_representation(out.induced.rep).ok)
    throw ContractViolation("extract_cocycle: induced action fails the module identities");
  out.induced.rep.verified = true;
  if (!verify_rb_representation(out.induced).ok)
    throw ContractViolation("extract_cocycle: induced action fails the operator compatibility");
  out.induced.verified = true;

  if (!vec_is_zero(mat_apply(rba_differential(out.induced, 2), embed_extension_cocycle(out.cocycle))))
    throw ContractViolation("extract_cocycle: extracted pair is not a cocycle");
  return out;
}

struct IsoResult {
  bool ok = false;
  Matrix zeta;   // (d+m) x (d+m), valid when ok
  Vec residual;  // (c1 - c2) - d^1(gamma, 0) when not ok
};

/// Isomorphism between the extensions of two cohomologous cocycles, from an
/// explicit bounding 1-cochain gamma (an m x d matrix) with
/// c1 - c2 = d^1(gamma, 0): zeta(x + u) = x + gamma(x) + u. The intertwining
/// identities are checked entrywise on the built extensions.
inline IsoResult iso_from_cohomologous(const RBRepresentation& P, const ExtensionCocycle& c1,
                                       const ExtensionCocycle& c2, const Matrix& gamma) {
  const std::size_t d = P.dim(), m = P.mdim(), n = d + m;
  IsoResult out;
  Vec diff = embed_extension_cocycle(c1);
  vec_add_scaled(diff, Rational(-1), embed_extension_cocycle(c2));
  Vec gcoords = zero_vec(d * m + m);
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t t = 0; t < m; ++t) gcoords[z * m + t] = gamma.at(t, z);
  Vec bound = mat_apply(rba_differential(P, 1), gcoords);
  vec_add_scaled(diff, Rational(-1), bound);
  if (!vec_is_zero(diff)) {
    out.residual = std::move(diff);
    return out;
  }

  out.zeta = Matrix::identity(n);
  out.zeta.set_block(d, 0, gamma);

  BuildResult b1 = build_extension(P, c1);
  BuildResult b2 = build_extension(P, c2);
  if (!b1.valid || !b2.valid)
    throw ContractViolation("iso_from_cohomologous: cohomologous pair contains a non-cocycle");
  const RotaBaxterStructure& t1 = b1.extension.total;
  const RotaBaxterStructure& t2 = b2.extension.total;
  if (!(out.zeta * t1.T == t2.T * out.zeta))
    throw ContractViolation("iso_from_cohomologous: operator intertwining fails");
  for_each_triple(n, [&](int i, int j, int k) {
    Vec lhs = mat_apply(out.zeta, t1.algebra.bracket_basis(i, j, k));
    Vec rhs = t2.algebra.bracket(out.zeta.column(i), out.zeta.column(j), out.zeta.column(k));
    if (!(lhs == rhs)) throw ContractViolation("iso_from_cohomologous: bracket intertwining fails");
  });
  out.ok = true;
  return out;
}

}  // namespace rb3lie
