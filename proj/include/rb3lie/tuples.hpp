#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rb3lie/rational.hpp"

namespace rb3lie {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

inline std::size_t pair_count(std::size_t d) { return binomial(d, 2); }
inline std::size_t triple_count(std::size_t d) { return binomial(d, 3); }

/// Lexicographic rank of the strictly increasing pair (i, j), 0-based.
inline std::size_t pair_rank(std::size_t i, std::size_t j, std::size_t d) {
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

inline std::array<int, 2> pair_unrank(std::size_t r, std::size_t d) {
  std::size_t i = 0;
  while (r >= d - i - 1) {
    r -= d - i - 1;
    ++i;
  }
  return {static_cast<int>(i), static_cast<int>(i + 1 + r)};
}

/// Lexicographic rank of the strictly increasing triple (i, j, k), 0-based.
inline std::size_t triple_rank(std::size_t i, std::size_t j, std::size_t k, std::size_t d) {
  std::size_t before_i = triple_count(d) - triple_count(d - i);
  return before_i + pair_rank(j - i - 1, k - i - 1, d - i - 1);
}

inline std::array<int, 3> triple_unrank(std::size_t r, std::size_t d) {
  std::size_t i = 0;
  while (true) {
    std::size_t block = pair_count(d - i - 1);
    if (r < block) break;
    r -= block;
    ++i;
  }
  auto jk = pair_unrank(r, d - i - 1);
  return {static_cast<int>(i), static_cast<int>(i + 1 + jk[0]), static_cast<int>(i + 1 + jk[1])};
}

/// Sorts (a, b) ascending. Returns the permutation sign, or 0 on a repeat.
inline int canonicalize_pair(int& a, int& b) {
  if (a == b) return 0;
  if (a > b) {
    std::swap(a, b);
    return -1;
  }
  return 1;
}

/// Sorts (a, b, c) ascending. Returns the permutation sign, or 0 on a repeat.
inline int canonicalize_triple(int& a, int& b, int& c) {
  int sign = 1;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (b > c) {
    std::swap(b, c);
    sign = -sign;
  }
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (a == b || b == c) return 0;
  return sign;
}

/// Iterates all strictly increasing pairs of {0..d-1} in lexicographic order.
template <typename F>
void for_each_pair(std::size_t d, F&& f) {
  for (int i = 0; i + 1 < static_cast<int>(d); ++i)
    for (int j = i + 1; j < static_cast<int>(d); ++j) f(i, j);
}

/// Iterates all strictly increasing triples of {0..d-1} in lexicographic order.
template <typename F>
void for_each_triple(std::size_t d, F&& f) {
  for (int i = 0; i + 2 < static_cast<int>(d); ++i)
    for (int j = i + 1; j + 1 < static_cast<int>(d); ++j)
      for (int k = j + 1; k < static_cast<int>(d); ++k) f(i, j, k);
}

}  // namespace rb3lie
