#pragma once

#include <string>
#include <vector>

#include "rb3lie/matrix.hpp"
#include "rb3lie/tuples.hpp"

namespace rb3lie {

/// Outcome of a verifier: either everything holds, or the complete list of
/// violating basis tuples (0-based indices) is returned.
struct VerifyResult {
  bool ok = true;
  std::vector<std::vector<int>> violations;

  void add(std::vector<int> tuple) {
    ok = false;
    violations.push_back(std::move(tuple));
  }
};

/// Finite-dimensional algebra with a totally skew trilinear bracket, given by
/// structure constants on strictly increasing basis triples. Construction
/// accepts raw data; `verified` is flipped by callers once the fundamental
/// identity has been checked, and structural operations demand it.
struct ThreeLieAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;  // optional; defaulted when empty
  std::vector<Vec> table;                // triple_count(dim) entries, each of length dim
  bool verified = false;

  static ThreeLieAlgebra abelian(std::size_t d) {
    ThreeLieAlgebra g;
    g.dim = d;
    g.table.assign(triple_count(d), zero_vec(d));
    return g;
  }

  std::string name_of(std::size_t i) const {
    if (i < basis_names.size() && !basis_names[i].empty()) return basis_names[i];
    return "e" + std::to_string(i + 1);
  }

  /// Bracket of basis vectors with arbitrary index order; repeats give 0.
  Vec bracket_basis(int i, int j, int k) const {
    int a = i, b = j, c = k;
    int sign = canonicalize_triple(a, b, c);
    if (sign == 0) return zero_vec(dim);
    Vec out = table[triple_rank(a, b, c, dim)];
    if (sign < 0)
      for (auto& x : out) x = -x;
    return out;
  }

  /// Trilinear extension to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const {
    Vec out = zero_vec(dim);
    for (int i = 0; i < static_cast<int>(dim); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < static_cast<int>(dim); ++j) {
        if (j == i || y[j].is_zero()) continue;
        Rational cij = x[i] * y[j];
        for (int k = 0; k < static_cast<int>(dim); ++k) {
          if (k == i || k == j || z[k].is_zero()) continue;
          vec_add_scaled(out, cij * z[k], bracket_basis(i, j, k));
        }
      }
    }
    return out;
  }

  Vec basis_vector(std::size_t i) const {
    Vec v = zero_vec(dim);
    v[i] = 1;
    return v;
  }
};

/// Checks the fundamental identity
///   [x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]
/// on all basis tuples. Both sides are skew in (x1,x2) and in (x3,x4,x5), so
/// strictly increasing pairs and triples are exhaustive; violating 5-tuples
/// are reported in that reduced form.
inline VerifyResult verify_fundamental_identity(const ThreeLieAlgebra& g) {
  VerifyResult res;
  const int d = static_cast<int>(g.dim);
  for_each_pair(d, [&](int x1, int x2) {
    for_each_triple(d, [&](int x3, int x4, int x5) {
      Vec inner = g.bracket_basis(x3, x4, x5);
      Vec lhs = g.bracket(g.basis_vector(x1), g.basis_vector(x2), inner);
      Vec rhs = zero_vec(g.dim);
      Vec b123 = g.bracket_basis(x1, x2, x3);
      Vec b124 = g.bracket_basis(x1, x2, x4);
      Vec b125 = g.bracket_basis(x1, x2, x5);
      for (std::size_t t = 0; t < g.dim; ++t) {
        if (!b123[t].is_zero()) vec_add_scaled(rhs, b123[t], g.bracket_basis(static_cast<int>(t), x4, x5));
        if (!b124[t].is_zero()) vec_add_scaled(rhs, b124[t], g.bracket_basis(x3, static_cast<int>(t), x5));
        if (!b125[t].is_zero()) vec_add_scaled(rhs, b125[t], g.bracket_basis(x3, x4, static_cast<int>(t)));
      }
      if (!(lhs == rhs)) res.add({x1, x2, x3, x4, x5});
    });
  });
  return res;
}

}  // namespace rb3lie
