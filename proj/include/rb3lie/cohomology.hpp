#pragma once

#include <string>
#include <vector>

#include "rb3lie/differentials.hpp"

namespace rb3lie {

enum class ComplexKind { ThreeLie, Operator, Combined };

inline const char* complex_kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::ThreeLie: return "3lie";
    case ComplexKind::Operator: return "rbo";
    default: return "rba";
  }
}

inline std::size_t complex_dim(const RBRepresentation& P, ComplexKind kind, int n) {
  CochainSpace sp(P.dim(), P.mdim(), n);
  if (kind != ComplexKind::Combined || n == 0) return sp.dim;
  return sp.dim + CochainSpace(P.dim(), P.mdim(), n - 1).dim;
}

inline Matrix complex_differential(const RBRepresentation& P, ComplexKind kind, int n) {
  switch (kind) {
    case ComplexKind::ThreeLie: return delta_matrix(P, n);
    case ComplexKind::Operator: return partial_matrix(P, n);
    default: return rba_differential(P, n);
  }
}

/// Asserts that consecutive differentials compose to zero for n <= n_max.
/// Violations are single-entry degree tags.
inline VerifyResult complex_square_zero(const RBRepresentation& P, ComplexKind kind, int n_max) {
  VerifyResult res;
  Matrix prev = complex_differential(P, kind, 0);
  for (int n = 1; n <= n_max; ++n) {
    Matrix cur = complex_differential(P, kind, n);
    if (!(cur * prev).is_zero()) res.add({n - 1});
    prev = std::move(cur);
  }
  return res;
}

struct CohomologyReport {
  ComplexKind kind = ComplexKind::ThreeLie;
  int n = 0;
  std::size_t space_dim = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t betti = 0;
  std::vector<Vec> cocycle_basis;
  std::vector<Vec> coboundary_basis;
  std::vector<Vec> representatives;  // cocycles spanning a complement of the coboundaries
};

/// Kernel, image, and quotient dimensions at one degree, with exact bases.
/// Representatives are the earliest cocycle-basis vectors that stay
/// independent modulo the coboundaries.
inline CohomologyReport betti(const RBRepresentation& P, ComplexKind kind, int n) {
  CohomologyReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.space_dim = complex_dim(P, kind, n);
  Matrix Dn = complex_differential(P, kind, n);
  rep.cocycle_basis = kernel_basis(Dn);
  rep.dim_cocycles = rep.cocycle_basis.size();
  if (n >= 1) {
    Matrix Dprev = complex_differential(P, kind, n - 1);
    for (std::size_t c : independent_columns(Dprev)) rep.coboundary_basis.push_back(Dprev.column(c));
  }
  rep.dim_coboundaries = rep.coboundary_basis.size();
  for (const Vec& b : rep.coboundary_basis)
    if (!vec_is_zero(mat_apply(Dn, b)))
      throw ContractViolation("betti: a coboundary is not a cocycle");
  if (rep.dim_cocycles < rep.dim_coboundaries)
    throw ContractViolation("betti: more coboundaries than cocycles");
  rep.betti = rep.dim_cocycles - rep.dim_coboundaries;

  if (rep.betti > 0) {
    Matrix span(rep.space_dim, rep.dim_coboundaries + rep.dim_cocycles);
    std::size_t col = 0;
    for (const Vec& b : rep.coboundary_basis) {
      for (std::size_t r = 0; r < rep.space_dim; ++r) span.at(r, col) = b[r];
      ++col;
    }
    for (const Vec& zv : rep.cocycle_basis) {
      for (std::size_t r = 0; r < rep.space_dim; ++r) span.at(r, col) = zv[r];
      ++col;
    }
    for (std::size_t c : independent_columns(span))
      if (c >= rep.dim_coboundaries) rep.representatives.push_back(rep.cocycle_basis[c - rep.dim_coboundaries]);
    if (rep.representatives.size() != rep.betti)
      throw ContractViolation("betti: representative count mismatch");
  }
  return rep;
}

/// Exact preimage of a degree-n element under the degree-(n-1) differential,
/// when one exists (membership in the coboundaries).
inline std::optional<Vec> coboundary_preimage(const RBRepresentation& P, ComplexKind kind, int n,
                                              const Vec& c) {
  if (n < 1) throw ContractViolation("coboundary_preimage: degree must be at least 1");
  return solve(complex_differential(P, kind, n - 1), c);
}

/// The map induced between degree-n cohomologies by the comparison map, in
/// the representative bases chosen by betti().
struct InducedMap {
  int n = 0;
  Matrix matrix;  // betti(rbo, n) x betti(3lie, n)
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t cokernel_dim = 0;
  CohomologyReport source, target;
};

inline InducedMap induced_phi_on_cohomology(const RBRepresentation& P, int n) {
  InducedMap out;
  out.n = n;
  out.source = betti(P, ComplexKind::ThreeLie, n);
  out.target = betti(P, ComplexKind::Operator, n);
  Matrix F = phi_matrix(P, n);
  Matrix Dn_op = partial_matrix(P, n);

  // Cocycles must land on cocycles and coboundaries on coboundaries.
  for (const Vec& zv : out.source.cocycle_basis)
    if (!vec_is_zero(mat_apply(Dn_op, mat_apply(F, zv))))
      throw ContractViolation("induced_phi_on_cohomology: image of a cocycle is not a cocycle");

  const std::size_t nb = out.target.coboundary_basis.size();
  const std::size_t nr = out.target.representatives.size();
  Matrix A(out.target.space_dim, nb + nr);
  for (std::size_t c = 0; c < nb; ++c)
    for (std::size_t r = 0; r < out.target.space_dim; ++r) A.at(r, c) = out.target.coboundary_basis[c][r];
  for (std::size_t c = 0; c < nr; ++c)
    for (std::size_t r = 0; r < out.target.space_dim; ++r)
      A.at(r, nb + c) = out.target.representatives[c][r];

  out.matrix = Matrix(out.target.betti, out.source.betti);
  for (std::size_t i = 0; i < out.source.representatives.size(); ++i) {
    Vec v = mat_apply(F, out.source.representatives[i]);
    auto x = solve(A, v);
    if (!x)
      throw ContractViolation("induced_phi_on_cohomology: image leaves the cocycle space");
    for (std::size_t j = 0; j < nr; ++j) out.matrix.at(j, i) = (*x)[nb + j];
  }
  for (const Vec& b : out.source.coboundary_basis) {
    Vec v = mat_apply(F, b);
    auto x = solve(A, v);
    if (!x) throw ContractViolation("induced_phi_on_cohomology: image of a coboundary is not a cocycle");
    for (std::size_t j = 0; j < nr; ++j)
      if (!(*x)[nb + j].is_zero())
        throw ContractViolation("induced_phi_on_cohomology: coboundary maps outside the coboundaries");
  }
  out.rank = rank(out.matrix);
  out.kernel_dim = out.source.betti - out.rank;
  out.cokernel_dim = out.target.betti - out.rank;
  return out;
}

/// Degreewise dimension bookkeeping of the long exact sequence.
struct LesRow {
  int n = 0;
  std::size_t h_threelie = 0, h_operator = 0, h_combined = 0;
  std::size_t ker_induced = 0, coker_induced_prev = 0;
  bool ok = false;
};

struct LesTable {
  bool ok = true;
  std::vector<LesRow> rows;
};

/// Checks dim H^n_combined = dim ker(induced at n) + dim coker(induced at n-1)
/// for 1 <= n <= n_max.
inline LesTable les_consistency(const RBRepresentation& P, int n_max) {
  LesTable table;
  std::vector<InducedMap> phi;
  phi.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) phi.push_back(induced_phi_on_cohomology(P, n));
  for (int n = 1; n <= n_max; ++n) {
    LesRow row;
    row.n = n;
    row.h_threelie = phi[n].source.betti;
    row.h_operator = phi[n].target.betti;
    row.h_combined = betti(P, ComplexKind::Combined, n).betti;
    row.ker_induced = phi[n].kernel_dim;
    row.coker_induced_prev = phi[n - 1].cokernel_dim;
    row.ok = row.h_combined == row.ker_induced + row.coker_induced_prev;
    table.ok = table.ok && row.ok;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace rb3lie
