#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rb3lie/three_lie.hpp"

namespace rb3lie {

/// A 3-Lie algebra together with a linear operator T and a scalar weight.
/// `verified` means: algebra passed the fundamental identity and T passed
/// the weighted Rota-Baxter relation.
struct RotaBaxterStructure {
  ThreeLieAlgebra algebra;
  Matrix T;  // dim x dim
  Rational weight = 0;
  bool verified = false;

  Vec apply_T(const Vec& v) const { return mat_apply(T, v); }
};

/// Weighted Rota-Baxter relation on basis triples:
///   [Tx,Ty,Tz] = T([Tx,Ty,z] + [Tx,y,Tz] + [x,Ty,Tz]
///                 + w([Tx,y,z] + [x,Ty,z] + [x,y,Tz]) + w^2 [x,y,z]).
/// Both sides are skew in (x,y,z); strictly increasing triples are exhaustive.
inline VerifyResult verify_rota_baxter(const RotaBaxterStructure& R) {
  VerifyResult res;
  const ThreeLieAlgebra& g = R.algebra;
  if (R.T.rows != g.dim || R.T.cols != g.dim)
    throw ContractViolation("verify_rota_baxter: operator shape mismatch");
  const Rational& w = R.weight;
  for_each_triple(g.dim, [&](int i, int j, int k) {
    Vec x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
    Vec Tx = R.apply_T(x), Ty = R.apply_T(y), Tz = R.apply_T(z);
    Vec lhs = g.bracket(Tx, Ty, Tz);
    Vec inner = g.bracket(Tx, Ty, z);
    Vec tmp = g.bracket(Tx, y, Tz);
    for (std::size_t t = 0; t < g.dim; ++t) inner[t] += tmp[t];
    tmp = g.bracket(x, Ty, Tz);
    for (std::size_t t = 0; t < g.dim; ++t) inner[t] += tmp[t];
    if (!w.is_zero()) {
      vec_add_scaled(inner, w, g.bracket(Tx, y, z));
      vec_add_scaled(inner, w, g.bracket(x, Ty, z));
      vec_add_scaled(inner, w, g.bracket(x, y, Tz));
      vec_add_scaled(inner, w * w, g.bracket(x, y, z));
    }
    Vec rhs = R.apply_T(inner);
    if (!(lhs == rhs)) res.add({i, j, k});
  });
  return res;
}

/// Structure constants of the derived bracket
///   [x,y,z]_T = [Tx,Ty,z] + [Tx,y,Tz] + [x,Ty,Tz]
///               + w([Tx,y,z] + [x,Ty,z] + [x,y,Tz]) + w^2 [x,y,z].
/// The result again satisfies the fundamental identity and carries T as a
/// Rota-Baxter operator of the same weight (checked by callers/tests).
inline ThreeLieAlgebra derived_bracket(const RotaBaxterStructure& R) {
  if (!R.verified) throw ContractViolation("derived_bracket: structure not verified");
  const ThreeLieAlgebra& g = R.algebra;
  const Rational& w = R.weight;
  ThreeLieAlgebra out = ThreeLieAlgebra::abelian(g.dim);
  out.basis_names = g.basis_names;
  for_each_triple(g.dim, [&](int i, int j, int k) {
    Vec x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
    Vec Tx = R.apply_T(x), Ty = R.apply_T(y), Tz = R.apply_T(z);
    Vec v = g.bracket(Tx, Ty, z);
    Vec tmp = g.bracket(Tx, y, Tz);
    for (std::size_t t = 0; t < g.dim; ++t) v[t] += tmp[t];
    tmp = g.bracket(x, Ty, Tz);
    for (std::size_t t = 0; t < g.dim; ++t) v[t] += tmp[t];
    if (!w.is_zero()) {
      vec_add_scaled(v, w, g.bracket(Tx, y, z));
      vec_add_scaled(v, w, g.bracket(x, Ty, z));
      vec_add_scaled(v, w, g.bracket(x, y, Tz));
      vec_add_scaled(v, w * w, g.bracket(x, y, z));
    }
    out.table[triple_rank(i, j, k, g.dim)] = std::move(v);
  });
  return out;
}

enum class OperatorTransform { Scale, Companion, Conjugate };

/// Derives a new Rota-Baxter structure from a verified one:
///  - Scale: T -> c T with weight c w.
///  - Companion: T -> -w id - T, same weight.
///  - Conjugate: T -> psi^{-1} T psi for an invertible bracket automorphism psi.
/// The result is re-verified before being returned.
inline RotaBaxterStructure transform_operator(const RotaBaxterStructure& R, OperatorTransform mode,
                                              const Rational& scale = Rational(1),
                                              const Matrix* psi = nullptr) {
  if (!R.verified) throw ContractViolation("transform_operator: structure not verified");
  RotaBaxterStructure out = R;
  out.verified = false;
  switch (mode) {
    case OperatorTransform::Scale:
      out.T = scale * R.T;
      out.weight = scale * R.weight;
      break;
    case OperatorTransform::Companion: {
      Matrix m = -R.T;
      for (std::size_t i = 0; i < m.rows; ++i) m.at(i, i) -= R.weight;
      out.T = std::move(m);
      break;
    }
    case OperatorTransform::Conjugate: {
      if (psi == nullptr) throw ContractViolation("transform_operator: conjugation needs a map");
      auto inv = inverse(*psi);
      if (!inv) throw ContractViolation("transform_operator: conjugating map is singular");
      const ThreeLieAlgebra& g = R.algebra;
      bool automorphism = true;
      for_each_triple(g.dim, [&](int i, int j, int k) {
        Vec lhs = mat_apply(*psi, g.bracket_basis(i, j, k));
        Vec rhs = g.bracket(psi->column(i), psi->column(j), psi->column(k));
        if (!(lhs == rhs)) automorphism = false;
      });
      if (!automorphism)
        throw ContractViolation("transform_operator: map is not a bracket automorphism");
      out.T = (*inv) * (R.T * (*psi));
      break;
    }
  }
  VerifyResult check = verify_rota_baxter(out);
  if (!check.ok) throw ContractViolation("transform_operator: result fails the weighted relation");
  out.verified = true;
  return out;
}

/// Raised when an enumeration would exceed the caller's cap; carries the size
/// the job would actually need.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t required_in, std::uint64_t cap_in)
      : std::runtime_error("enumeration needs " + std::to_string(required_in) +
                           " candidates but the cap is " + std::to_string(cap_in)),
        required(required_in),
        cap(cap_in) {}
  std::uint64_t required;
  std::uint64_t cap;
};

/// Enumerates every dim x dim matrix with entries drawn from `entries` and
/// returns those satisfying the weighted Rota-Baxter relation, in enumeration
/// order (entries vary fastest in the last matrix slot).
inline std::vector<Matrix> search_rb_operators(const ThreeLieAlgebra& g, const Rational& weight,
                                               const std::vector<Rational>& entries,
                                               std::uint64_t cap) {
  if (!g.verified) throw ContractViolation("search_rb_operators: algebra not verified");
  if (entries.empty()) return {};
  const std::size_t cells = g.dim * g.dim;
  Int required = 1;
  for (std::size_t i = 0; i < cells; ++i) required *= entries.size();
  if (required > cap) {
    std::uint64_t req = required > Int(UINT64_MAX) ? UINT64_MAX : required.convert_to<std::uint64_t>();
    throw CapExceeded(req, cap);
  }

  std::vector<Matrix> found;
  std::vector<std::size_t> digit(cells, 0);
  RotaBaxterStructure cand;
  cand.algebra = g;
  cand.weight = weight;
  cand.T = Matrix(g.dim, g.dim);
  while (true) {
    for (std::size_t c = 0; c < cells; ++c) cand.T.a[c] = entries[digit[c]];
    if (verify_rota_baxter(cand).ok) found.push_back(cand.T);
    std::size_t pos = cells;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < entries.size()) break;
      digit[pos] = 0;
      if (pos == 0) return found;
    }
    if (cells == 0) return found;
  }
}

}  // namespace rb3lie
