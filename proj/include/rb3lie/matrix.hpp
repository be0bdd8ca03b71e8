#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "rb3lie/rational.hpp"

namespace rb3lie {

/// Dense row-major matrix of exact rationals.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  bool operator==(const Matrix& other) const = default;

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows_in) {
    if (rows_in.empty()) return Matrix();
    Matrix m(rows_in.size(), rows_in[0].size());
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (rows_in[r].size() != m.cols) throw ContractViolation("from_rows: ragged rows");
      for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows_in[r][c];
    }
    return m;
  }

  Vec column(std::size_t c) const {
    Vec v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
  }

  /// Copies `sub` into this matrix with upper-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& sub) {
    for (std::size_t r = 0; r < sub.rows; ++r)
      for (std::size_t c = 0; c < sub.cols; ++c) at(r0 + r, c0 + c) = sub.at(r, c);
  }
};

inline Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw ContractViolation("matrix add: shape mismatch");
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

inline Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw ContractViolation("matrix sub: shape mismatch");
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

inline Matrix operator-(const Matrix& x) {
  Matrix out = x;
  for (auto& v : out.a) v = -v;
  return out;
}

inline Matrix operator*(const Rational& c, const Matrix& x) {
  Matrix out = x;
  for (auto& v : out.a) v *= c;
  return out;
}

/// Sparse-aware product. Cost is sum over k of nnz(A[:,k]) * nnz(B[k,:]),
/// which keeps products of large assembled differentials cheap.
inline Matrix operator*(const Matrix& A, const Matrix& B) {
  if (A.cols != B.rows) throw ContractViolation("matrix mul: shape mismatch");
  Matrix C(A.rows, B.cols);
  std::vector<std::vector<std::size_t>> col_support(A.cols);
  for (std::size_t r = 0; r < A.rows; ++r)
    for (std::size_t k = 0; k < A.cols; ++k)
      if (!A.at(r, k).is_zero()) col_support[k].push_back(r);
  for (std::size_t k = 0; k < A.cols; ++k) {
    if (col_support[k].empty()) continue;
    for (std::size_t j = 0; j < B.cols; ++j) {
      const Rational& bkj = B.at(k, j);
      if (bkj.is_zero()) continue;
      for (std::size_t r : col_support[k]) C.at(r, j) += A.at(r, k) * bkj;
    }
  }
  return C;
}

inline Vec mat_apply(const Matrix& A, const Vec& v) {
  if (A.cols != v.size()) throw ContractViolation("matrix apply: shape mismatch");
  Vec out = zero_vec(A.rows);
  for (std::size_t c = 0; c < A.cols; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < A.rows; ++r) {
      const Rational& arc = A.at(r, c);
      if (!arc.is_zero()) out[r] += arc * v[c];
    }
  }
  return out;
}

namespace detail {

/// Echelonization state produced by fraction-free (Bareiss) elimination.
/// Entries are arbitrary-precision integers; row scaling keeps rank, kernel
/// and solution sets of the original rational system intact.
struct Echelon {
  std::size_t rows = 0;
  std::size_t cols = 0;           // columns participating in pivot search
  std::size_t total_cols = 0;     // cols, plus any augmented columns
  std::vector<Int> e;             // row-major, total_cols wide
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), in order

  Int& at(std::size_t r, std::size_t c) { return e[r * total_cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return e[r * total_cols + c]; }
};

/// Clears denominators row by row, then runs Bareiss elimination with
/// deterministic pivoting: first nonzero entry in column order.
inline Echelon bareiss(const Matrix& A, const Vec* augmented = nullptr) {
  Echelon E;
  E.rows = A.rows;
  E.cols = A.cols;
  E.total_cols = A.cols + (augmented ? 1 : 0);
  E.e.assign(E.rows * E.total_cols, Int(0));
  for (std::size_t r = 0; r < A.rows; ++r) {
    Int lcm = 1;
    for (std::size_t c = 0; c < A.cols; ++c) {
      Int den = denominator_of(A.at(r, c));
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    if (augmented) lcm = boost::multiprecision::lcm(lcm, denominator_of((*augmented)[r]));
    for (std::size_t c = 0; c < A.cols; ++c) {
      const Rational& q = A.at(r, c);
      E.at(r, c) = numerator_of(q) * (lcm / denominator_of(q));
    }
    if (augmented) {
      const Rational& q = (*augmented)[r];
      E.at(r, A.cols) = numerator_of(q) * (lcm / denominator_of(q));
    }
  }

  Int prev = 1;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < E.cols && pr < E.rows; ++c) {
    std::size_t pivot_row = pr;
    while (pivot_row < E.rows && E.at(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == E.rows) continue;
    if (pivot_row != pr)
      for (std::size_t j = 0; j < E.total_cols; ++j) std::swap(E.at(pr, j), E.at(pivot_row, j));
    const Int piv = E.at(pr, c);
    for (std::size_t i = pr + 1; i < E.rows; ++i) {
      const Int head = E.at(i, c);
      for (std::size_t j = c + 1; j < E.total_cols; ++j)
        E.at(i, j) = (piv * E.at(i, j) - head * E.at(pr, j)) / prev;
      E.at(i, c) = 0;
    }
    E.pivots.emplace_back(pr, c);
    prev = piv;
    ++pr;
  }
  return E;
}

}  // namespace detail

inline std::size_t rank(const Matrix& A) { return detail::bareiss(A).pivots.size(); }

/// Basis of { v : A v = 0 }, one vector per free column, in ascending free-column order.
/// The free coordinate of each vector equals 1; pivot coordinates are back-substituted.
inline std::vector<Vec> kernel_basis(const Matrix& A) {
  detail::Echelon E = detail::bareiss(A);
  std::vector<bool> is_pivot_col(A.cols, false);
  for (auto [r, c] : E.pivots) is_pivot_col[c] = true;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < A.cols; ++fc) {
    if (is_pivot_col[fc]) continue;
    Vec v = zero_vec(A.cols);
    v[fc] = 1;
    for (std::size_t k = E.pivots.size(); k-- > 0;) {
      auto [r, c] = E.pivots[k];
      Rational acc(0);
      for (std::size_t j = c + 1; j < A.cols; ++j) {
        if (v[j].is_zero() || E.at(r, j) == 0) continue;
        acc += Rational(E.at(r, j)) * v[j];
      }
      v[c] = -acc / Rational(E.at(r, c));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One exact solution of A x = b if the system is consistent (free variables set to 0).
inline std::optional<Vec> solve(const Matrix& A, const Vec& b) {
  if (b.size() != A.rows) throw ContractViolation("solve: rhs length mismatch");
  detail::Echelon E = detail::bareiss(A, &b);
  for (std::size_t r = E.pivots.size(); r < E.rows; ++r)
    if (E.at(r, A.cols) != 0) return std::nullopt;
  Vec x = zero_vec(A.cols);
  for (std::size_t k = E.pivots.size(); k-- > 0;) {
    auto [r, c] = E.pivots[k];
    Rational acc = Rational(E.at(r, A.cols));
    for (std::size_t j = c + 1; j < A.cols; ++j) {
      if (x[j].is_zero() || E.at(r, j) == 0) continue;
      acc -= Rational(E.at(r, j)) * x[j];
    }
    x[c] = acc / Rational(E.at(r, c));
  }
  return x;
}

/// Exact inverse, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& A) {
  if (A.rows != A.cols) return std::nullopt;
  Matrix inv(A.rows, A.cols);
  for (std::size_t j = 0; j < A.cols; ++j) {
    Vec e = zero_vec(A.rows);
    e[j] = 1;
    auto x = solve(A, e);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < A.rows; ++i) inv.at(i, j) = (*x)[i];
  }
  return inv;
}

/// Column indices of a deterministic maximal independent column subset
/// (the pivot columns under first-nonzero elimination).
inline std::vector<std::size_t> independent_columns(const Matrix& A) {
  detail::Echelon E = detail::bareiss(A);
  std::vector<std::size_t> out;
  out.reserve(E.pivots.size());
  for (auto [r, c] : E.pivots) out.push_back(c);
  return out;
}

}  // namespace rb3lie
