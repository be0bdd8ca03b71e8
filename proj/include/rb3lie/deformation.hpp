#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rb3lie/cohomology.hpp"

namespace rb3lie {

/// One-parameter deformation of a Rota-Baxter structure, truncated at t^N:
/// bracket mu_t = mu_0 + mu_1 t + .. + mu_N t^N and operator
/// T_t = T + T_1 t + .. + T_N t^N. Higher bracket terms are stored as skew
/// trilinear tables (the algebra type used purely as a table holder).
struct TruncatedDeformation {
  RotaBaxterStructure base;
  int order = 1;
  std::vector<ThreeLieAlgebra> mu;  // mu[i] holds the order-(i+1) term
  std::vector<Matrix> t;            // t[i] holds the order-(i+1) term

  const ThreeLieAlgebra& mu_at(int i) const { return i == 0 ? base.algebra : mu[i - 1]; }
  const Matrix& t_at(int i) const { return i == 0 ? base.T : t[i - 1]; }

  bool term_is_zero(int i) const {
    if (i == 0) return false;
    for (const Vec& v : mu[i - 1].table)
      if (!vec_is_zero(v)) return false;
    return t[i - 1].is_zero();
  }

  static TruncatedDeformation trivial(const RotaBaxterStructure& base, int order) {
    TruncatedDeformation D;
    D.base = base;
    D.order = order;
    D.mu.assign(order, ThreeLieAlgebra::abelian(base.algebra.dim));
    D.t.assign(order, Matrix(base.algebra.dim, base.algebra.dim));
    return D;
  }
};

enum class DeformationMode { OperatorOnly, Pair };

struct DeformationVerdict {
  bool ok = true;
  int order = -1;              // first failing t-power
  int identity = 0;            // 1 = bracket identity, 2 = operator identity
  std::vector<int> tuple;      // the violating basis tuple
};

namespace detail {

inline void check_deformation_shapes(const TruncatedDeformation& D) {
  const std::size_t d = D.base.algebra.dim;
  if (!D.base.verified) throw ContractViolation("deformation: base not verified");
  if (D.order < 1 || D.mu.size() != static_cast<std::size_t>(D.order) ||
      D.t.size() != static_cast<std::size_t>(D.order))
    throw ContractViolation("deformation: term lists do not match the order");
  for (const auto& m : D.mu)
    if (m.dim != d || m.table.size() != triple_count(d))
      throw ContractViolation("deformation: bracket term shape mismatch");
  for (const auto& m : D.t)
    if (m.rows != d || m.cols != d) throw ContractViolation("deformation: operator term shape mismatch");
}

/// Coefficient of t^n in the bracket identity, as LHS - RHS on basis slots
/// (x1, x2 | x3 < x4 < x5).
inline Vec deformation_fi_defect(const TruncatedDeformation& D, int n, int x1, int x2, int x3,
                                 int x4, int x5) {
  const std::size_t d = D.base.algebra.dim;
  Vec defect = zero_vec(d);
  auto e = [&](int i) { return D.base.algebra.basis_vector(i); };
  for (int i = 0; i <= n; ++i) {
    const ThreeLieAlgebra& mo = D.mu_at(i);
    const ThreeLieAlgebra& mi = D.mu_at(n - i);
    vec_add_scaled(defect, Rational(1), mo.bracket(e(x1), e(x2), mi.bracket_basis(x3, x4, x5)));
    vec_add_scaled(defect, Rational(-1), mo.bracket(mi.bracket_basis(x1, x2, x3), e(x4), e(x5)));
    vec_add_scaled(defect, Rational(-1), mo.bracket(e(x3), mi.bracket_basis(x1, x2, x4), e(x5)));
    vec_add_scaled(defect, Rational(-1), mo.bracket(e(x3), e(x4), mi.bracket_basis(x1, x2, x5)));
  }
  return defect;
}

/// Coefficient of t^n in the operator identity, as LHS - RHS on an
/// increasing basis triple.
inline Vec deformation_rb_defect(const TruncatedDeformation& D, int n, int x1, int x2, int x3) {
  const std::size_t d = D.base.algebra.dim;
  const Rational& w = D.base.weight;
  Vec defect = zero_vec(d);
  auto e = [&](int i) { return D.base.algebra.basis_vector(i); };
  auto top = [&](int i, int v) { return mat_apply(D.t_at(i), e(v)); };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      for (int k = 0; i + j + k <= n; ++k) {
        const int l = n - i - j - k;
        const ThreeLieAlgebra& m = D.mu_at(i);
        vec_add_scaled(defect, Rational(1), m.bracket(top(j, x1), top(k, x2), top(l, x3)));
        const ThreeLieAlgebra& mj = D.mu_at(j);
        Vec inner = mj.bracket(top(k, x1), top(l, x2), e(x3));
        vec_add_scaled(inner, Rational(1), mj.bracket(top(k, x1), e(x2), top(l, x3)));
        vec_add_scaled(inner, Rational(1), mj.bracket(e(x1), top(k, x2), top(l, x3)));
        vec_add_scaled(defect, Rational(-1), mat_apply(D.t_at(i), inner));
      }
      if (!w.is_zero()) {
        const int k = n - i - j;
        const ThreeLieAlgebra& mj = D.mu_at(j);
        Vec inner = mj.bracket(top(k, x1), e(x2), e(x3));
        vec_add_scaled(inner, Rational(1), mj.bracket(e(x1), top(k, x2), e(x3)));
        vec_add_scaled(inner, Rational(1), mj.bracket(e(x1), e(x2), top(k, x3)));
        vec_add_scaled(defect, -w, mat_apply(D.t_at(i), inner));
      }
    }
    if (!w.is_zero()) {
      const int j = n - i;
      vec_add_scaled(defect, -(w * w),
                     mat_apply(D.t_at(i), D.mu_at(j).bracket_basis(x1, x2, x3)));
    }
  }
  return defect;
}

}  // namespace detail

/// Checks the coefficient-of-t^n identities for 0 <= n <= N on all reduced
/// basis tuples. operator_only additionally requires every bracket term to
/// vanish.
inline DeformationVerdict verify_deformation(const TruncatedDeformation& D, DeformationMode mode) {
  detail::check_deformation_shapes(D);
  if (mode == DeformationMode::OperatorOnly)
    for (const auto& m : D.mu)
      for (const Vec& v : m.table)
        if (!vec_is_zero(v))
          throw ContractViolation("verify_deformation: operator_only with nonzero bracket terms");
  const int d = static_cast<int>(D.base.algebra.dim);
  DeformationVerdict verdict;
  for (int n = 0; n <= D.order && verdict.ok; ++n) {
    for_each_pair(d, [&](int x1, int x2) {
      for_each_triple(d, [&](int x3, int x4, int x5) {
        if (!verdict.ok) return;
        if (!vec_is_zero(detail::deformation_fi_defect(D, n, x1, x2, x3, x4, x5)))
          verdict = {false, n, 1, {x1, x2, x3, x4, x5}};
      });
    });
    if (!verdict.ok) break;
    for_each_triple(d, [&](int x1, int x2, int x3) {
      if (!verdict.ok) return;
      if (!vec_is_zero(detail::deformation_rb_defect(D, n, x1, x2, x3)))
        verdict = {false, n, 2, {x1, x2, x3}};
    });
  }
  return verdict;
}

/// Coordinates of a 1-cochain (a linear map g -> g) in the degree-1 basis.
inline Vec embed_one_cochain(const Matrix& psi) {
  Vec c = zero_vec(psi.rows * psi.cols);
  for (std::size_t z = 0; z < psi.cols; ++z)
    for (std::size_t t = 0; t < psi.rows; ++t) c[z * psi.rows + t] = psi.at(t, z);
  return c;
}

inline Matrix extract_one_cochain(const Vec& c, std::size_t d, std::size_t m) {
  Matrix psi(m, d);
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t t = 0; t < m; ++t) psi.at(t, z) = c[z * m + t];
  return psi;
}

/// Coordinates of a (bracket term, operator term) pair in the degree-2 basis
/// of the combined complex over the regular module.
inline Vec embed_pair_cochain(const RotaBaxterStructure& base, const ThreeLieAlgebra& mu1,
                              const Matrix& t1) {
  const std::size_t d = base.algebra.dim;
  CochainSpace c2(d, d, 2);
  Vec c = zero_vec(c2.dim + d * d);
  for (std::size_t tr = 0; tr < triple_count(d); ++tr)
    for (std::size_t t = 0; t < d; ++t) c[tr * d + t] = mu1.table[tr][t];
  Vec tail = embed_one_cochain(t1);
  for (std::size_t i = 0; i < tail.size(); ++i) c[c2.dim + i] = tail[i];
  return c;
}

inline std::pair<ThreeLieAlgebra, Matrix> split_pair_cochain(const RotaBaxterStructure& base,
                                                             const Vec& c) {
  const std::size_t d = base.algebra.dim;
  CochainSpace c2(d, d, 2);
  ThreeLieAlgebra mu1 = ThreeLieAlgebra::abelian(d);
  for (std::size_t tr = 0; tr < triple_count(d); ++tr)
    for (std::size_t t = 0; t < d; ++t) mu1.table[tr][t] = c[tr * d + t];
  Vec tail(c.begin() + static_cast<std::ptrdiff_t>(c2.dim), c.end());
  return {std::move(mu1), extract_one_cochain(tail, d, d)};
}

struct Infinitesimal {
  DeformationMode mode = DeformationMode::Pair;
  Vec cochain;  // degree-2 combined coordinates (pair) or degree-1 operator coordinates
  ThreeLieAlgebra mu1;
  Matrix t1;
  bool cocycle = false;
};

/// First-order term of a valid deformation, embedded in the cochain complex
/// of the regular module, with its cocycle property asserted.
inline Infinitesimal infinitesimal(const TruncatedDeformation& D, DeformationMode mode) {
  detail::check_deformation_shapes(D);
  Infinitesimal out;
  out.mode = mode;
  out.mu1 = D.mu_at(1);
  out.t1 = D.t_at(1);
  RBRepresentation reg = regular_representation(D.base);
  if (mode == DeformationMode::Pair) {
    out.cochain = embed_pair_cochain(D.base, out.mu1, out.t1);
    out.cocycle = vec_is_zero(mat_apply(rba_differential(reg, 2), out.cochain));
  } else {
    out.cochain = embed_one_cochain(out.t1);
    out.cocycle = vec_is_zero(mat_apply(partial_matrix(reg, 1), out.cochain));
  }
  if (!out.cocycle)
    throw ContractViolation("infinitesimal: first-order term is not a cocycle (deformation invalid)");
  return out;
}

/// Truncated formal isomorphism psi_t = id + psi_1 t + .. + psi_N t^N.
struct DeformationEquivalence {
  int order = 1;
  std::vector<Matrix> psi;  // psi[i] holds the order-(i+1) term

  static DeformationEquivalence identity(std::size_t d, int order) {
    DeformationEquivalence E;
    E.order = order;
    E.psi.assign(order, Matrix(d, d));
    return E;
  }

  Matrix psi_at(int i) const {
    return i == 0 ? Matrix::identity(psi.empty() ? 0 : psi[0].rows) : psi[i - 1];
  }

  /// Power-series inverse: phi_0 = id, phi_n = -sum_{b=1..n} phi_{n-b} psi_b.
  std::vector<Matrix> inverse_terms() const {
    const std::size_t d = psi.empty() ? 0 : psi[0].rows;
    std::vector<Matrix> phi(order + 1, Matrix::identity(d));
    for (int n = 1; n <= order; ++n) {
      Matrix acc(d, d);
      for (int b = 1; b <= n; ++b) acc = acc + phi[n - b] * psi[b - 1];
      phi[n] = -acc;
    }
    return phi;
  }
};

/// Pointwise product of the two series, truncated at the common order.
inline DeformationEquivalence compose_equivalences(const DeformationEquivalence& first,
                                                   const DeformationEquivalence& second) {
  if (first.order != second.order)
    throw ContractViolation("compose_equivalences: order mismatch");
  const std::size_t d = first.psi.empty() ? 0 : first.psi[0].rows;
  DeformationEquivalence out = DeformationEquivalence::identity(d, first.order);
  for (int n = 1; n <= out.order; ++n) {
    Matrix acc(d, d);
    for (int a = 0; a <= n; ++a) acc = acc + first.psi_at(a) * second.psi_at(n - a);
    out.psi[n - 1] = acc;
  }
  return out;
}

/// Transport of structure: mu'_t = psi_t^{-1} mu_t (psi_t x, psi_t y, psi_t z)
/// and T'_t = psi_t^{-1} T_t psi_t, truncated at t^N.
inline TruncatedDeformation apply_equivalence(const TruncatedDeformation& D,
                                              const DeformationEquivalence& E) {
  detail::check_deformation_shapes(D);
  if (E.order != D.order) throw ContractViolation("apply_equivalence: order mismatch");
  const std::size_t d = D.base.algebra.dim;
  std::vector<Matrix> phi = E.inverse_terms();
  auto psi = [&](int i) { return E.psi_at(i); };

  TruncatedDeformation out = TruncatedDeformation::trivial(D.base, D.order);
  for (int n = 1; n <= D.order; ++n) {
    ThreeLieAlgebra& mu_n = out.mu[n - 1];
    for_each_triple(d, [&](int i, int j, int k) {
      Vec v = zero_vec(d);
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
          for (int c = 0; a + b + c <= n; ++c)
            for (int e2 = 0; a + b + c + e2 <= n; ++e2) {
              const int f = n - a - b - c - e2;
              Vec inner = D.mu_at(b).bracket(mat_apply(psi(c), D.base.algebra.basis_vector(i)),
                                             mat_apply(psi(e2), D.base.algebra.basis_vector(j)),
                                             mat_apply(psi(f), D.base.algebra.basis_vector(k)));
              vec_add_scaled(v, Rational(1), mat_apply(phi[a], inner));
            }
      mu_n.table[triple_rank(i, j, k, d)] = std::move(v);
    });
    Matrix tn(d, d);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) tn = tn + phi[a] * D.t_at(b) * psi(n - a - b);
    out.t[n - 1] = std::move(tn);
  }
  return out;
}

struct TrivializeResult {
  bool trivialized = false;
  DeformationEquivalence equivalence;
  int obstructed_order = -1;
  Vec obstruction;  // degree-2 combined coordinates of the non-bounding cocycle
};

/// Stagewise trivialization: at each order n the current (mu_n, T_n) is a
/// degree-2 cocycle; when it bounds, a twist by id - psi t^n removes it.
/// Reports the first non-bounding stage otherwise.
inline TrivializeResult trivialize(const TruncatedDeformation& D) {
  detail::check_deformation_shapes(D);
  const std::size_t d = D.base.algebra.dim;
  RBRepresentation reg = regular_representation(D.base);
  Matrix d1 = rba_differential(reg, 1);
  Matrix d2 = rba_differential(reg, 2);

  TrivializeResult res;
  res.equivalence = DeformationEquivalence::identity(d, D.order);
  TruncatedDeformation cur = D;
  for (int n = 1; n <= D.order; ++n) {
    if (cur.term_is_zero(n)) continue;
    Vec c = embed_pair_cochain(D.base, cur.mu_at(n), cur.t_at(n));
    if (!vec_is_zero(mat_apply(d2, c)))
      throw ContractViolation("trivialize: stage term is not a cocycle (deformation invalid)");
    auto x = solve(d1, c);
    if (!x) {
      res.obstructed_order = n;
      res.obstruction = c;
      return res;
    }
    Vec head((*x).begin(), (*x).begin() + static_cast<std::ptrdiff_t>(d * d));
    Matrix psi = extract_one_cochain(head, d, d);
    DeformationEquivalence stage = DeformationEquivalence::identity(d, D.order);
    stage.psi[n - 1] = -psi;
    cur = apply_equivalence(cur, stage);
    if (!cur.term_is_zero(n))
      throw ContractViolation("trivialize: twist failed to remove the stage term");
    res.equivalence = compose_equivalences(res.equivalence, stage);
  }
  res.trivialized = true;
  return res;
}

}  // namespace rb3lie
