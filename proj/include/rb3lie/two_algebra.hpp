#pragma once

#include <utility>
#include <vector>

#include "rb3lie/cohomology.hpp"

namespace rb3lie {

/// Two-term 2-algebra data. The mixed trilinear bracket is completely skew
/// across degrees; its only independent components are the all-degree-0 part
/// (a bracket table on g0) and the degree-(0,0,1) part, stored like an action
/// tensor S(x, y) on g1 for increasing g0 pairs. The degree-5 coherence map
/// l5 takes a g0 pair and a g0 triple and lands in g1; it is stored as a
/// degree-3 cochain coordinate vector with g1 coefficients.
struct ThreeLie2Algebra {
  std::size_t d0 = 0, d1 = 0;
  Matrix dmap;                 // d0 x d1
  ThreeLieAlgebra l3_000;      // bracket table on g0 (no identity implied)
  std::vector<Matrix> l3_001;  // pair_count(d0) matrices, each d1 x d1
  Vec l5;                      // CochainSpace(d0, d1, 3) coordinates

  static ThreeLie2Algebra zero(std::size_t d0_in, std::size_t d1_in) {
    ThreeLie2Algebra A;
    A.d0 = d0_in;
    A.d1 = d1_in;
    A.dmap = Matrix(d0_in, d1_in);
    A.l3_000 = ThreeLieAlgebra::abelian(d0_in);
    A.l3_001.assign(pair_count(d0_in), Matrix(d1_in, d1_in));
    A.l5 = zero_vec(CochainSpace(d0_in, d1_in, 3).dim);
    return A;
  }

  /// Read-only module view of the degree-(0,0,1) component.
  Representation action_view() const {
    Representation P;
    P.algebra = l3_000;
    P.mdim = d1;
    P.rho = l3_001;
    return P;
  }

  CochainSpace l5_space() const { return CochainSpace(d0, d1, 3); }
};

/// All six defining identities, on exhaustive reduced basis tuples.
/// Violation tags: {condition, tuple...} with g1 indices listed after g0 ones.
inline VerifyResult verify_2algebra(const ThreeLie2Algebra& A) {
  VerifyResult res;
  const int d0 = static_cast<int>(A.d0), d1 = static_cast<int>(A.d1);
  Representation act = A.action_view();
  CochainSpace sp = A.l5_space();
  const ThreeLieAlgebra& g0 = A.l3_000;
  auto dvec = [&](int a) { return A.dmap.column(a); };  // d(alpha) in g0 coordinates
  auto l5_at = [&](int a, int b, int c, int e, int f) {
    return sp.eval(A.l5, {a, b, c, e, f});
  };

  // (1) d l3(x, y, alpha) = l3(x, y, d alpha)
  for_each_pair(d0, [&](int x, int y) {
    for (int a = 0; a < d1; ++a) {
      Vec lhs = mat_apply(A.dmap, act.rho_of(x, y).column(a));
      Vec rhs = g0.bracket(g0.basis_vector(x), g0.basis_vector(y), dvec(a));
      if (!(lhs == rhs)) res.add({1, x, y, a});
    }
  });
  // (2) l3(alpha, d beta, x) = l3(d alpha, beta, x), i.e.
  //     S(d beta, x) alpha + S(d alpha, x) beta = 0
  for (int a = 0; a < d1; ++a)
    for (int b = a; b < d1; ++b)
      for (int x = 0; x < d0; ++x) {
        Vec lhs = mat_apply(act.rho_vec(dvec(b), g0.basis_vector(x)), unit_vec(A.d1, a));
        vec_add_scaled(lhs, Rational(1),
                       mat_apply(act.rho_vec(dvec(a), g0.basis_vector(x)), unit_vec(A.d1, b)));
        if (!vec_is_zero(lhs)) res.add({2, x, a, b});
      }
  // (3) d l5(x1..x5) = the bracket identity defect of l3 on (x1, x2 | x3, x4, x5)
  for_each_pair(d0, [&](int x1, int x2) {
    for_each_triple(d0, [&](int x3, int x4, int x5) {
      Vec lhs = mat_apply(A.dmap, l5_at(x1, x2, x3, x4, x5));
      auto e = [&](int i) { return g0.basis_vector(i); };
      Vec rhs = g0.bracket(e(x1), e(x2), g0.bracket_basis(x3, x4, x5));
      vec_sub(rhs, g0.bracket(g0.bracket_basis(x1, x2, x3), e(x4), e(x5)));
      vec_sub(rhs, g0.bracket(e(x3), g0.bracket_basis(x1, x2, x4), e(x5)));
      vec_sub(rhs, g0.bracket(e(x3), e(x4), g0.bracket_basis(x1, x2, x5)));
      for (auto& v : rhs) v = -v;
      if (!(lhs == rhs)) res.add({3, x1, x2, x3, x4, x5});
    });
  });
  // (4) l5(d alpha, x2, x3, x4, x5) = the same defect with alpha in slot 1
  for (int a = 0; a < d1; ++a)
    for (int x2 = 0; x2 < d0; ++x2)
      for_each_triple(d0, [&](int x3, int x4, int x5) {
        Vec lhs = sp.eval_vec(A.l5, {dvec(a), g0.basis_vector(x2), g0.basis_vector(x3),
                                     g0.basis_vector(x4), g0.basis_vector(x5)});
        Vec al = unit_vec(A.d1, a);
        auto e = [&](int i) { return g0.basis_vector(i); };
        // l3(alpha, x2, w) = S(x2, w) alpha for w in g0
        Vec rhs = mat_apply(act.rho_vec(e(x2), g0.bracket_basis(x3, x4, x5)), al);
        vec_sub(rhs, mat_apply(act.rho_vec(e(x4), e(x5)) * act.rho_vec(e(x2), e(x3)), al));
        Vec t2v = mat_apply(act.rho_of(x3, x5) * act.rho_vec(e(x2), e(x4)), al);
        vec_add_scaled(rhs, Rational(1), t2v);  // l3(x3, beta, x5) = -S(x3, x5) beta
        vec_sub(rhs, mat_apply(act.rho_of(x3, x4) * act.rho_vec(e(x2), e(x5)), al));
        for (auto& v : rhs) v = -v;
        if (!(lhs == rhs)) res.add({4, x2, x3, x4, x5, a});
      });
  // (5) l5(x1, x2, d alpha, x4, x5) with alpha in the triple's first slot
  for_each_pair(d0, [&](int x1, int x2) {
    for (int a = 0; a < d1; ++a)
      for_each_pair(d0, [&](int x4, int x5) {
        Vec lhs = sp.eval_vec(A.l5, {g0.basis_vector(x1), g0.basis_vector(x2), dvec(a),
                                     g0.basis_vector(x4), g0.basis_vector(x5)});
        Vec al = unit_vec(A.d1, a);
        auto e = [&](int i) { return g0.basis_vector(i); };
        Vec rhs = mat_apply(act.rho_of(x1, x2) * act.rho_of(x4, x5), al);
        vec_sub(rhs, mat_apply(act.rho_vec(g0.bracket_basis(x1, x2, x4), e(x5)), al));
        vec_sub(rhs, mat_apply(act.rho_of(x4, x5) * act.rho_of(x1, x2), al));
        vec_sub(rhs, mat_apply(act.rho_vec(e(x4), g0.bracket_basis(x1, x2, x5)), al));
        for (auto& v : rhs) v = -v;
        if (!(lhs == rhs)) res.add({5, x1, x2, x4, x5, a});
      });
  });
  // (6) the seven-on-seven coherence of l5 against l3
  for_each_pair(d0, [&](int x1, int x2) {
    for_each_pair(d0, [&](int x3, int x4) {
      for_each_triple(d0, [&](int x5, int x6, int x7) {
        auto e = [&](int i) { return g0.basis_vector(i); };
        auto S = [&](int i, int j) { return act.rho_of(i, j); };
        Vec lhs = mat_apply(S(x6, x7), l5_at(x1, x2, x3, x4, x5));
        vec_sub(lhs, mat_apply(S(x5, x7), l5_at(x1, x2, x3, x4, x6)));
        vec_add_scaled(lhs, Rational(1), mat_apply(S(x1, x2), l5_at(x3, x4, x5, x6, x7)));
        vec_add_scaled(lhs, Rational(1), mat_apply(S(x5, x6), l5_at(x1, x2, x3, x4, x7)));
        vec_add_scaled(lhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x1), e(x2), g0.bracket_basis(x3, x4, x5), e(x6), e(x7)}));
        vec_add_scaled(lhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x1), e(x2), e(x5), g0.bracket_basis(x3, x4, x6), e(x7)}));
        vec_add_scaled(lhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x1), e(x2), e(x5), e(x6), g0.bracket_basis(x3, x4, x7)}));
        Vec rhs = mat_apply(S(x3, x4), l5_at(x1, x2, x5, x6, x7));
        vec_add_scaled(rhs, Rational(1),
                       sp.eval_vec(A.l5, {g0.bracket_basis(x1, x2, x3), e(x4), e(x5), e(x6), e(x7)}));
        vec_add_scaled(rhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x3), g0.bracket_basis(x1, x2, x4), e(x5), e(x6), e(x7)}));
        vec_add_scaled(rhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x3), e(x4), g0.bracket_basis(x1, x2, x5), e(x6), e(x7)}));
        vec_add_scaled(rhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x3), e(x4), e(x5), g0.bracket_basis(x1, x2, x6), e(x7)}));
        vec_add_scaled(rhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x1), e(x2), e(x3), e(x4), g0.bracket_basis(x5, x6, x7)}));
        vec_add_scaled(rhs, Rational(1),
                       sp.eval_vec(A.l5, {e(x3), e(x4), e(x5), e(x6), g0.bracket_basis(x1, x2, x7)}));
        if (!(lhs == rhs)) res.add({6, x1, x2, x3, x4, x5, x6, x7});
      });
    });
  });
  return res;
}

/// 2-algebra with a triple of operator data.
struct RB2Algebra {
  ThreeLie2Algebra underlying;
  Matrix T0;              // d0 x d0
  Matrix T1;              // d1 x d1
  std::vector<Vec> t2;    // triple_count(d0) entries, each of length d1
  Rational weight = 0;

  bool is_skeletal() const { return underlying.dmap.is_zero(); }
  bool is_strict() const {
    if (!vec_is_zero(underlying.l5)) return false;
    for (const Vec& v : t2)
      if (!vec_is_zero(v)) return false;
    return true;
  }
};

namespace detail {

/// T2 on arbitrary basis slots (sign-canonicalized), then on vectors.
inline Vec t2_basis(const RB2Algebra& A, int i, int j, int k) {
  int a = i, b = j, c = k;
  int s = canonicalize_triple(a, b, c);
  if (s == 0) return zero_vec(A.underlying.d1);
  Vec v = A.t2[triple_rank(a, b, c, A.underlying.d0)];
  if (s < 0)
    for (auto& x : v) x = -x;
  return v;
}

inline Vec t2_vec(const RB2Algebra& A, const Vec& x, const Vec& y, const Vec& z) {
  const int d0 = static_cast<int>(A.underlying.d0);
  Vec out = zero_vec(A.underlying.d1);
  for (int i = 0; i < d0; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d0; ++j) {
      if (j == i || y[j].is_zero()) continue;
      for (int k = 0; k < d0; ++k) {
        if (k == i || k == j || z[k].is_zero()) continue;
        vec_add_scaled(out, x[i] * y[j] * z[k], t2_basis(A, i, j, k));
      }
    }
  }
  return out;
}

/// Derived bracket of l3_000 along T0 (seven decorated terms).
inline Vec derived_l3(const RB2Algebra& A, int i, int j, int k) {
  const ThreeLieAlgebra& g0 = A.underlying.l3_000;
  const Rational& w = A.weight;
  Vec Ti = A.T0.column(i), Tj = A.T0.column(j), Tk = A.T0.column(k);
  Vec ei = g0.basis_vector(i), ej = g0.basis_vector(j), ek = g0.basis_vector(k);
  Vec v = g0.bracket(Ti, Tj, ek);
  vec_add_scaled(v, Rational(1), g0.bracket(Ti, ej, Tk));
  vec_add_scaled(v, Rational(1), g0.bracket(ei, Tj, Tk));
  if (!w.is_zero()) {
    vec_add_scaled(v, w, g0.bracket(Ti, ej, ek));
    vec_add_scaled(v, w, g0.bracket(ei, Tj, ek));
    vec_add_scaled(v, w, g0.bracket(ei, ej, Tk));
    vec_add_scaled(v, w * w, g0.bracket(ei, ej, ek));
  }
  return v;
}

/// Descended action S_T(x, y) = S(T0 x, T0 y) - T1 (S(T0 x, y) + S(x, T0 y) + w S(x, y)).
inline Matrix descended_action(const RB2Algebra& A, const Representation& act, int x, int y) {
  const ThreeLieAlgebra& g0 = A.underlying.l3_000;
  const Rational& w = A.weight;
  Vec Tx = A.T0.column(x), Ty = A.T0.column(y);
  Vec ex = g0.basis_vector(x), ey = g0.basis_vector(y);
  Matrix inner = act.rho_vec(Tx, ey) + act.rho_vec(ex, Ty) + w * act.rho_of(x, y);
  return act.rho_vec(Tx, Ty) - A.T1 * inner;
}

}  // namespace detail

/// The four operator identities. Violation tags: {10 + letter index, tuple...}
/// (11 = first identity, .., 14 = fourth). The fourth is evaluated as the
/// matching degree-3 coboundary block: (descended coboundary of T2) plus
/// (comparison map of l5) must vanish; this is the reading under which the
/// skeletal classification below is an exact equivalence.
inline VerifyResult verify_rb_2algebra(const RB2Algebra& A) {
  if (!verify_2algebra(A.underlying).ok)
    throw ContractViolation("verify_rb_2algebra: underlying 2-algebra invalid");
  VerifyResult res;
  const int d0 = static_cast<int>(A.underlying.d0), d1 = static_cast<int>(A.underlying.d1);
  const ThreeLieAlgebra& g0 = A.underlying.l3_000;
  const Rational& w = A.weight;
  Representation act = A.underlying.action_view();
  CochainSpace sp = A.underlying.l5_space();

  // (a) T0 d = d T1
  if (!(A.T0 * A.underlying.dmap == A.underlying.dmap * A.T1)) res.add({11});

  // (b) T0(decorated combination) - l3(T0 x, T0 y, T0 z) = d T2(x, y, z)
  for_each_triple(d0, [&](int x, int y, int z) {
    Vec Tx = A.T0.column(x), Ty = A.T0.column(y), Tz = A.T0.column(z);
    Vec ex = g0.basis_vector(x), ey = g0.basis_vector(y), ez = g0.basis_vector(z);
    Vec inner = g0.bracket(Tx, Ty, ez);
    vec_add_scaled(inner, Rational(1), g0.bracket(ex, Ty, Tz));
    vec_add_scaled(inner, Rational(1), g0.bracket(Tx, ey, Tz));
    if (!w.is_zero()) {
      vec_add_scaled(inner, w, g0.bracket(Tx, ey, ez));
      vec_add_scaled(inner, w, g0.bracket(ex, Ty, ez));
      vec_add_scaled(inner, w, g0.bracket(ex, ey, Tz));
      vec_add_scaled(inner, w * w, g0.bracket(ex, ey, ez));
    }
    Vec lhs = mat_apply(A.T0, inner);
    vec_sub(lhs, g0.bracket(Tx, Ty, Tz));
    Vec rhs = mat_apply(A.underlying.dmap, A.t2[triple_rank(x, y, z, d0)]);
    if (!(lhs == rhs)) res.add({12, x, y, z});
  });

  // (c) T1(decorated combination on (x, y, alpha)) - l3(T0 x, T0 y, T1 alpha)
  //     = T2(x, y, d alpha)
  for_each_pair(d0, [&](int x, int y) {
    Vec Tx = A.T0.column(x), Ty = A.T0.column(y);
    Vec ex = g0.basis_vector(x), ey = g0.basis_vector(y);
    Matrix STT = act.rho_vec(Tx, Ty);
    Matrix inner = act.rho_vec(ex, Ty) * A.T1 + act.rho_vec(Tx, ey) * A.T1 + STT;
    if (!w.is_zero())
      inner = inner + w * act.rho_vec(Tx, ey) + w * act.rho_vec(ex, Ty) +
              w * (act.rho_of(x, y) * A.T1) + (w * w) * act.rho_of(x, y);
    Matrix lhs = A.T1 * inner - STT * A.T1;
    for (int a = 0; a < d1; ++a) {
      Vec lv = lhs.column(a);
      Vec rv = detail::t2_vec(A, ex, ey, A.underlying.dmap.column(a));
      if (!(lv == rv)) res.add({13, x, y, a});
    }
  });

  // (d) degree-3 coherence: (descended coboundary of T2)(tuple)
  //     + (comparison map of l5)(tuple) = 0
  for_each_pair(d0, [&](int x1, int x2) {
    for_each_triple(d0, [&](int x3, int x4, int x5) {
      auto e = [&](int i) { return g0.basis_vector(i); };
      auto bT = [&](int i, int j, int k) { return detail::derived_l3(A, i, j, k); };
      Vec acc = detail::t2_vec(A, e(x1), e(x2), bT(x3, x4, x5));
      vec_sub(acc, detail::t2_vec(A, bT(x1, x2, x3), e(x4), e(x5)));
      vec_sub(acc, detail::t2_vec(A, e(x3), bT(x1, x2, x4), e(x5)));
      vec_sub(acc, detail::t2_vec(A, e(x3), e(x4), bT(x1, x2, x5)));
      vec_add_scaled(acc, Rational(1),
                     mat_apply(detail::descended_action(A, act, x1, x2), detail::t2_basis(A, x3, x4, x5)));
      vec_sub(acc, mat_apply(detail::descended_action(A, act, x3, x4), detail::t2_basis(A, x1, x2, x5)));
      vec_sub(acc, mat_apply(detail::descended_action(A, act, x4, x5), detail::t2_basis(A, x1, x2, x3)));
      vec_sub(acc, mat_apply(detail::descended_action(A, act, x5, x3), detail::t2_basis(A, x1, x2, x4)));
      // comparison map of l5 on the same tuple
      const int slots[5] = {x1, x2, x3, x4, x5};
      for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<Vec> args(5);
        unsigned size = 0;
        for (int s = 0; s < 5; ++s) {
          if (mask & (1u << s)) {
            args[s] = A.T0.column(slots[s]);
            ++size;
          } else {
            args[s] = e(slots[s]);
          }
        }
        Vec val = sp.eval_vec(A.underlying.l5, args);
        if (mask == 31u) {
          vec_add_scaled(acc, Rational(1), val);
        } else {
          Rational scale = -rational_pow(w, 4 - size);
          if (!scale.is_zero()) vec_add_scaled(acc, scale, mat_apply(A.T1, val));
        }
      }
      if (!vec_is_zero(acc)) res.add({14, x1, x2, x3, x4, x5});
    });
  });
  return res;
}

struct SkeletalCocycle {
  RBRepresentation rep;  // (g1, action, T1) over (g0, T0)
  Vec coords;            // degree-3 combined coordinates of (l5, T2)
  bool cocycle = false;
};

/// Classifying 3-cochain pair of a skeletal instance, with its cocycle
/// property asserted.
inline SkeletalCocycle skeletal_to_cocycle(const RB2Algebra& A) {
  if (!A.is_skeletal()) throw ContractViolation("skeletal_to_cocycle: nonzero degree map");
  if (!verify_rb_2algebra(A).ok)
    throw ContractViolation("skeletal_to_cocycle: operator identities fail");
  const std::size_t d0 = A.underlying.d0, d1 = A.underlying.d1;

  SkeletalCocycle out;
  out.rep.rep = A.underlying.action_view();
  out.rep.rep.algebra.verified = verify_fundamental_identity(out.rep.rep.algebra).ok;
  if (!out.rep.rep.algebra.verified)
    throw ContractViolation("skeletal_to_cocycle: base bracket fails the fundamental identity");
  out.rep.rep.verified = verify_representation(out.rep.rep).ok;
  out.rep.TM = A.T1;
  out.rep.rb.algebra = out.rep.rep.algebra;
  out.rep.rb.T = A.T0;
  out.rep.rb.weight = A.weight;
  out.rep.rb.verified = verify_rota_baxter(out.rep.rb).ok;
  out.rep.verified = out.rep.rep.verified && out.rep.rb.verified &&
                     verify_rb_representation(out.rep).ok;
  if (!out.rep.verified)
    throw ContractViolation("skeletal_to_cocycle: skeletal data does not descend to a module");

  CochainSpace c3(d0, d1, 3);
  CochainSpace c2(d0, d1, 2);
  out.coords = zero_vec(c3.dim + c2.dim);
  for (std::size_t i = 0; i < c3.dim; ++i) out.coords[i] = A.underlying.l5[i];
  for (std::size_t tr = 0; tr < triple_count(d0); ++tr)
    for (std::size_t t = 0; t < d1; ++t) out.coords[c3.dim + tr * d1 + t] = A.t2[tr][t];
  out.cocycle = vec_is_zero(mat_apply(rba_differential(out.rep, 3), out.coords));
  if (!out.cocycle)
    throw ContractViolation("skeletal_to_cocycle: classifying pair is not a cocycle");
  return out;
}

/// Skeletal instance built from a degree-3 cocycle of a module.
inline RB2Algebra cocycle_to_skeletal(const RBRepresentation& P, const Vec& coords) {
  if (!P.verified || !P.rep.verified || !P.rb.verified)
    throw ContractViolation("cocycle_to_skeletal: inputs not verified");
  const std::size_t d0 = P.dim(), d1 = P.mdim();
  CochainSpace c3(d0, d1, 3);
  CochainSpace c2(d0, d1, 2);
  if (coords.size() != c3.dim + c2.dim)
    throw ContractViolation("cocycle_to_skeletal: coordinate length mismatch");
  if (!vec_is_zero(mat_apply(rba_differential(P, 3), coords)))
    throw ContractViolation("cocycle_to_skeletal: not a cocycle");

  RB2Algebra A;
  A.underlying = ThreeLie2Algebra::zero(d0, d1);
  A.underlying.l3_000 = P.rep.algebra;
  A.underlying.l3_001 = P.rep.rho;
  for (std::size_t i = 0; i < c3.dim; ++i) A.underlying.l5[i] = coords[i];
  A.T0 = P.rb.T;
  A.T1 = P.TM;
  A.weight = P.weight();
  A.t2.assign(triple_count(d0), zero_vec(d1));
  for (std::size_t tr = 0; tr < triple_count(d0); ++tr)
    for (std::size_t t = 0; t < d1; ++t) A.t2[tr][t] = coords[c3.dim + tr * d1 + t];
  if (!verify_rb_2algebra(A).ok)
    throw ContractViolation("cocycle_to_skeletal: constructed instance fails verification");
  return A;
}

/// Two towers with a differential, an action, and compatible operators.
struct CrossedModule {
  RotaBaxterStructure base;  // (g0, T0, weight), must be verified
  ThreeLieAlgebra g1;        // bracket table on g1
  Matrix dmap;               // d0 x d1
  std::vector<Matrix> S;     // pair_count(d0) matrices, each d1 x d1
  Matrix T1;                 // d1 x d1
};

/// Violation tags: 1 g1 bracket identity; 2 d homomorphism; 3 action
/// identities; 4 operator compatibility of the action; 5 d(S(x,y) alpha);
/// 6 T0 d = d T1; 7 S(d alpha, d beta) = g1 bracket; 8 Peiffer-type skew rule.
inline VerifyResult verify_crossed_module(const CrossedModule& C) {
  if (!C.base.verified) throw ContractViolation("verify_crossed_module: base not verified");
  VerifyResult res;
  const int d0 = static_cast<int>(C.base.algebra.dim), d1 = static_cast<int>(C.g1.dim);

  for (const auto& v : verify_fundamental_identity(C.g1).violations) {
    std::vector<int> tag = {1};
    tag.insert(tag.end(), v.begin(), v.end());
    res.add(tag);
  }
  for_each_triple(d1, [&](int a, int b, int c) {
    Vec lhs = mat_apply(C.dmap, C.g1.bracket_basis(a, b, c));
    Vec rhs = C.base.algebra.bracket(C.dmap.column(a), C.dmap.column(b), C.dmap.column(c));
    if (!(lhs == rhs)) res.add({2, a, b, c});
  });

  RBRepresentation act;
  act.rep.algebra = C.base.algebra;
  act.rep.mdim = C.g1.dim;
  act.rep.rho = C.S;
  for (const auto& v : verify_representation(act.rep).violations) {
    std::vector<int> tag = {3};
    tag.insert(tag.end(), v.begin(), v.end());
    res.add(tag);
  }
  act.rep.verified = true;  // only the shape is needed below
  act.TM = C.T1;
  act.rb = C.base;
  for (const auto& v : verify_rb_representation(act).violations) {
    std::vector<int> tag = {4};
    tag.insert(tag.end(), v.begin(), v.end());
    res.add(tag);
  }

  for_each_pair(d0, [&](int x, int y) {
    const Matrix& Sxy = C.S[pair_rank(x, y, d0)];
    for (int a = 0; a < d1; ++a) {
      Vec lhs = mat_apply(C.dmap, Sxy.column(a));
      Vec rhs = C.base.algebra.bracket(C.base.algebra.basis_vector(x),
                                       C.base.algebra.basis_vector(y), C.dmap.column(a));
      if (!(lhs == rhs)) res.add({5, x, y, a});
    }
  });
  if (!(C.base.T * C.dmap == C.dmap * C.T1)) res.add({6});
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d1; ++b) {
      if (a == b) continue;
      Matrix Sab = act.rep.rho_vec(C.dmap.column(a), C.dmap.column(b));
      for (int c = 0; c < d1; ++c) {
        Vec lhs = Sab.column(c);
        Vec rhs = C.g1.bracket(C.g1.basis_vector(a), C.g1.basis_vector(b), C.g1.basis_vector(c));
        if (!(lhs == rhs)) res.add({7, a, b, c});
      }
    }
  for (int x = 0; x < d0; ++x)
    for (int a = 0; a < d1; ++a)
      for (int b = a; b < d1; ++b) {
        Vec lhs = mat_apply(act.rep.rho_vec(C.base.algebra.basis_vector(x), C.dmap.column(a)),
                        unit_vec(C.g1.dim, b));
        vec_add_scaled(lhs, Rational(1),
                       mat_apply(act.rep.rho_vec(C.base.algebra.basis_vector(x), C.dmap.column(b)),
                             unit_vec(C.g1.dim, a)));
        if (!vec_is_zero(lhs)) res.add({8, x, a, b});
      }
  return res;
}

/// Strict instance from a crossed module: the mixed bracket is the action,
/// l5 and T2 vanish.
inline RB2Algebra crossed_module_to_strict(const CrossedModule& C) {
  if (!verify_crossed_module(C).ok)
    throw ContractViolation("crossed_module_to_strict: crossed module invalid");
  RB2Algebra A;
  A.underlying = ThreeLie2Algebra::zero(C.base.algebra.dim, C.g1.dim);
  A.underlying.l3_000 = C.base.algebra;
  A.underlying.l3_001 = C.S;
  A.underlying.dmap = C.dmap;
  A.T0 = C.base.T;
  A.T1 = C.T1;
  A.weight = C.base.weight;
  A.t2.assign(triple_count(C.base.algebra.dim), zero_vec(C.g1.dim));
  if (!verify_rb_2algebra(A).ok)
    throw ContractViolation("crossed_module_to_strict: constructed instance fails verification");
  return A;
}

/// Crossed module from a strict instance. The g1 bracket is defined through
/// the degree map; its three defining expressions are asserted to agree.
inline CrossedModule strict_to_crossed_module(const RB2Algebra& A) {
  if (!A.is_strict()) throw ContractViolation("strict_to_crossed_module: instance not strict");
  if (!verify_rb_2algebra(A).ok)
    throw ContractViolation("strict_to_crossed_module: operator identities fail");
  const int d1 = static_cast<int>(A.underlying.d1);
  Representation act = A.underlying.action_view();
  auto dv = [&](int a) { return A.underlying.dmap.column(a); };

  CrossedModule C;
  C.base.algebra = A.underlying.l3_000;
  C.base.T = A.T0;
  C.base.weight = A.weight;
  if (!verify_fundamental_identity(C.base.algebra).ok || !verify_rota_baxter(C.base).ok)
    throw ContractViolation("strict_to_crossed_module: degree-0 tower is not a valid base");
  C.base.algebra.verified = true;
  C.base.verified = true;

  C.g1 = ThreeLieAlgebra::abelian(d1);
  for_each_triple(d1, [&](int a, int b, int c) {
    Vec e1 = mat_apply(act.rho_vec(dv(a), dv(b)), unit_vec(A.underlying.d1, c));
    Vec e2 = mat_apply(act.rho_vec(dv(a), dv(c)), unit_vec(A.underlying.d1, b));
    for (auto& v : e2) v = -v;
    Vec e3 = mat_apply(act.rho_vec(dv(b), dv(c)), unit_vec(A.underlying.d1, a));
    if (!(e1 == e2) || !(e1 == e3))
      throw ContractViolation("strict_to_crossed_module: bracket expressions disagree");
    C.g1.table[triple_rank(a, b, c, d1)] = e1;
  });
  C.dmap = A.underlying.dmap;
  C.S = A.underlying.l3_001;
  C.T1 = A.T1;
  if (!verify_crossed_module(C).ok)
    throw ContractViolation("strict_to_crossed_module: constructed crossed module invalid");
  return C;
}

}  // namespace rb3lie
