#pragma once

#include <vector>

#include "rb3lie/representation.hpp"

namespace rb3lie {

/// Degree-n cochains take 2n-1 algebra slots (n >= 1): n-2 skew pairs followed
/// by one totally skew triple in the final three slots. Degree 1 has a single
/// slot; degree 0 cochains are module vectors. Values live in the module, so a
/// coordinate index is (canonical slot tuple, module target), enumerated
/// lexicographically with the target varying fastest.
struct CochainSpace {
  std::size_t d = 0;
  std::size_t m = 0;
  int n = 0;
  std::size_t tuples = 0;
  std::size_t dim = 0;

  CochainSpace() = default;
  CochainSpace(std::size_t d_in, std::size_t m_in, int n_in) : d(d_in), m(m_in), n(n_in) {
    if (n == 0) {
      tuples = 1;
    } else if (n == 1) {
      tuples = d;
    } else {
      tuples = triple_count(d);
      for (int b = 0; b < n - 2; ++b) tuples *= pair_count(d);
    }
    dim = (n == 0) ? m : tuples * m;
  }

  std::size_t slot_count() const { return n == 0 ? 0 : 2 * static_cast<std::size_t>(n) - 1; }
  std::size_t pair_blocks() const { return n >= 2 ? static_cast<std::size_t>(n) - 2 : 0; }

  /// Canonicalizes slots in place (each pair sorted, final triple sorted).
  /// Returns the sign, or 0 when a pair or the triple repeats an index.
  int canonicalize(std::vector<int>& slots) const {
    int sign = 1;
    for (std::size_t b = 0; b < pair_blocks(); ++b) {
      int s = canonicalize_pair(slots[2 * b], slots[2 * b + 1]);
      if (s == 0) return 0;
      sign *= s;
    }
    if (n >= 2) {
      std::size_t t0 = 2 * pair_blocks();
      int s = canonicalize_triple(slots[t0], slots[t0 + 1], slots[t0 + 2]);
      if (s == 0) return 0;
      sign *= s;
    }
    return sign;
  }

  /// Rank of a canonical slot tuple (pairs then triple, all lexicographic).
  std::size_t tuple_rank(const std::vector<int>& slots) const {
    if (n == 0) return 0;
    if (n == 1) return static_cast<std::size_t>(slots[0]);
    std::size_t r = 0;
    for (std::size_t b = 0; b < pair_blocks(); ++b)
      r = r * pair_count(d) + pair_rank(slots[2 * b], slots[2 * b + 1], d);
    std::size_t t0 = 2 * pair_blocks();
    return r * triple_count(d) + triple_rank(slots[t0], slots[t0 + 1], slots[t0 + 2], d);
  }

  std::vector<int> tuple_slots(std::size_t rank) const {
    std::vector<int> slots(slot_count(), 0);
    if (n == 0) return slots;
    if (n == 1) {
      slots[0] = static_cast<int>(rank);
      return slots;
    }
    auto tri = triple_unrank(rank % triple_count(d), d);
    rank /= triple_count(d);
    std::size_t t0 = 2 * pair_blocks();
    slots[t0] = tri[0];
    slots[t0 + 1] = tri[1];
    slots[t0 + 2] = tri[2];
    for (std::size_t b = pair_blocks(); b-- > 0;) {
      auto pr = pair_unrank(rank % pair_count(d), d);
      rank /= pair_count(d);
      slots[2 * b] = pr[0];
      slots[2 * b + 1] = pr[1];
    }
    return slots;
  }

  std::size_t coord(std::size_t tuple, std::size_t target) const { return tuple * m + target; }

  /// Value of a coordinate cochain on arbitrary basis slots (module vector).
  Vec eval(const std::vector<Rational>& f, std::vector<int> slots) const {
    Vec out = zero_vec(m);
    int sign = canonicalize(slots);
    if (sign == 0) return out;
    std::size_t tr = tuple_rank(slots);
    for (std::size_t t = 0; t < m; ++t) {
      const Rational& v = f[coord(tr, t)];
      if (!v.is_zero()) out[t] = sign > 0 ? v : -v;
    }
    return out;
  }

  /// Multilinear extension: slots given as coordinate vectors in the algebra.
  Vec eval_vec(const std::vector<Rational>& f, const std::vector<Vec>& args) const {
    Vec out = zero_vec(m);
    std::vector<int> slots(slot_count(), 0);
    eval_vec_rec(f, args, 0, Rational(1), slots, out);
    return out;
  }

 private:
  void eval_vec_rec(const std::vector<Rational>& f, const std::vector<Vec>& args, std::size_t pos,
                    const Rational& coeff, std::vector<int>& slots, Vec& out) const {
    if (pos == slot_count()) {
      Vec v = eval(f, slots);
      for (std::size_t t = 0; t < m; ++t)
        if (!v[t].is_zero()) out[t] += coeff * v[t];
      return;
    }
    for (std::size_t u = 0; u < d; ++u) {
      if (args[pos][u].is_zero()) continue;
      slots[pos] = static_cast<int>(u);
      eval_vec_rec(f, args, pos + 1, coeff * args[pos][u], slots, out);
    }
  }
};

}  // namespace rb3lie
