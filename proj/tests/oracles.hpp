#pragma once

#include <cstdint>
#include <vector>

#include "rb3lie/rb3lie.hpp"

// Brute-force evaluators kept deliberately unlike the library paths: full
// structure-constant tensors, full index cubes (no skew reduction), machine
// integers instead of rationals. Inputs must have integer entries.

namespace oracle {

inline long long to_int(const rb3lie::Rational& q) {
  if (rb3lie::denominator_of(q) != 1) throw std::runtime_error("oracle: non-integer entry");
  return rb3lie::numerator_of(q).convert_to<long long>();
}

struct Tensor {
  int d = 0;
  std::vector<long long> c;  // c[((i d + j) d + k) d + t]

  long long at(int i, int j, int k, int t) const {
    return c[static_cast<std::size_t>(((i * d + j) * d + k) * d + t)];
  }
  long long& at(int i, int j, int k, int t) {
    return c[static_cast<std::size_t>(((i * d + j) * d + k) * d + t)];
  }
};

/// Full bracket tensor from a table on increasing triples, antisymmetrized
/// over the six explicit permutations.
inline Tensor bracket_tensor(const rb3lie::ThreeLieAlgebra& g) {
  const int d = static_cast<int>(g.dim);
  Tensor ten;
  ten.d = d;
  ten.c.assign(static_cast<std::size_t>(d) * d * d * d, 0);
  const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  const long long sign[6] = {1, 1, 1, -1, -1, -1};
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        const rb3lie::Vec& v = g.table[rb3lie::triple_rank(i, j, k, d)];
        const int idx[3] = {i, j, k};
        for (int p = 0; p < 6; ++p)
          for (int t = 0; t < d; ++t)
            ten.at(idx[perm[p][0]], idx[perm[p][1]], idx[perm[p][2]], t) = sign[p] * to_int(v[t]);
      }
  return ten;
}

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // column-major: mat[j] is column j

inline IMat to_cols(const rb3lie::Matrix& T) {
  IMat cols(T.cols, IVec(T.rows, 0));
  for (std::size_t j = 0; j < T.cols; ++j)
    for (std::size_t i = 0; i < T.rows; ++i) cols[j][i] = to_int(T.at(i, j));
  return cols;
}

inline IVec bracket_vec(const Tensor& ten, const IVec& x, const IVec& y, const IVec& z) {
  IVec out(ten.d, 0);
  for (int i = 0; i < ten.d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < ten.d; ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < ten.d; ++k) {
        if (z[k] == 0) continue;
        long long coeff = x[i] * y[j] * z[k];
        for (int t = 0; t < ten.d; ++t) out[t] += coeff * ten.at(i, j, k, t);
      }
    }
  }
  return out;
}

inline IVec unit(int d, int i) {
  IVec v(d, 0);
  v[i] = 1;
  return v;
}

inline IVec mat_vec(const IMat& cols, const IVec& v) {
  IVec out(cols[0].size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (v[j] != 0)
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[j] * cols[j][i];
  return out;
}

/// Fundamental identity over the full index cube.
inline bool fi_holds(const Tensor& ten) {
  const int d = ten.d;
  for (int x1 = 0; x1 < d; ++x1)
    for (int x2 = 0; x2 < d; ++x2)
      for (int x3 = 0; x3 < d; ++x3)
        for (int x4 = 0; x4 < d; ++x4)
          for (int x5 = 0; x5 < d; ++x5) {
            IVec inner(d, 0);
            for (int t = 0; t < d; ++t) inner[t] = ten.at(x3, x4, x5, t);
            IVec lhs = bracket_vec(ten, unit(d, x1), unit(d, x2), inner);
            IVec rhs(d, 0);
            for (int t = 0; t < d; ++t) {
              long long c1 = ten.at(x1, x2, x3, t);
              long long c2 = ten.at(x1, x2, x4, t);
              long long c3 = ten.at(x1, x2, x5, t);
              if (c1 != 0) {
                IVec term = bracket_vec(ten, unit(d, t), unit(d, x4), unit(d, x5));
                for (int s = 0; s < d; ++s) rhs[s] += c1 * term[s];
              }
              if (c2 != 0) {
                IVec term = bracket_vec(ten, unit(d, x3), unit(d, t), unit(d, x5));
                for (int s = 0; s < d; ++s) rhs[s] += c2 * term[s];
              }
              if (c3 != 0) {
                IVec term = bracket_vec(ten, unit(d, x3), unit(d, x4), unit(d, t));
                for (int s = 0; s < d; ++s) rhs[s] += c3 * term[s];
              }
            }
            for (int s = 0; s < d; ++s)
              if (lhs[s] != rhs[s]) return false;
          }
  return true;
}

/// Weighted operator relation over the full basis cube:
///   [Tx,Ty,Tz] = T( [Tx,Ty,z] + [Tx,y,Tz] + [x,Ty,Tz]
///                   + w([Tx,y,z] + [x,Ty,z] + [x,y,Tz]) + w^2 [x,y,z] ).
inline bool rb_holds(const Tensor& ten, const IMat& tcols, long long w) {
  const int d = ten.d;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        IVec ex = unit(d, x), ey = unit(d, y), ez = unit(d, z);
        const IVec& Tx = tcols[x];
        const IVec& Ty = tcols[y];
        const IVec& Tz = tcols[z];
        IVec lhs = bracket_vec(ten, Tx, Ty, Tz);
        IVec acc = bracket_vec(ten, Tx, Ty, ez);
        IVec t2 = bracket_vec(ten, Tx, ey, Tz);
        IVec t3 = bracket_vec(ten, ex, Ty, Tz);
        for (int s = 0; s < d; ++s) acc[s] += t2[s] + t3[s];
        if (w != 0) {
          IVec w1 = bracket_vec(ten, Tx, ey, ez);
          IVec w2 = bracket_vec(ten, ex, Ty, ez);
          IVec w3 = bracket_vec(ten, ex, ey, Tz);
          for (int s = 0; s < d; ++s) acc[s] += w * (w1[s] + w2[s] + w3[s]);
          for (int s = 0; s < d; ++s) acc[s] += w * w * ten.at(x, y, z, s);
        }
        IVec rhs = mat_vec(tcols, acc);
        for (int s = 0; s < d; ++s)
          if (lhs[s] != rhs[s]) return false;
      }
  return true;
}

inline bool rb_holds(const rb3lie::ThreeLieAlgebra& g, const rb3lie::Matrix& T,
                     const rb3lie::Rational& w) {
  return rb_holds(bracket_tensor(g), to_cols(T), to_int(w));
}

}  // namespace oracle
