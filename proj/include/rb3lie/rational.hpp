#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace rb3lie {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in canonical form: reduced, denominator positive.
using Rational = boost::multiprecision::cpp_rational;

/// Contract violations: an operation was called on inputs that break its preconditions.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Input that does not conform to the documented file format or value grammar.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Int numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& q) {
  Int num = numerator_of(q);
  Int den = denominator_of(q);
  std::string s = num.str();
  if (den != 1) {
    s += "/";
    s += den.str();
  }
  return s;
}

/// Parses "p", "-p", "p/q", "-p/q" with q > 0. Anything else is a ParseError.
inline Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw ParseError("malformed rational: \"" + text + "\" (expected p, -p, p/q or -p/q with q > 0)");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == digits_start) return fail();
  Int num(text.substr(digits_start, pos - digits_start));
  Int den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') return fail();
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_start || pos != text.size()) return fail();
    den = Int(text.substr(den_start, pos - den_start));
    if (den == 0) return fail();
  }
  if (negative) num = -num;
  return Rational(num, den);
}

/// Integer power with non-negative exponent.
inline Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational acc(1);
  for (unsigned i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline void vec_add_scaled(Vec& dst, const Rational& c, const Vec& src) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

inline void vec_sub(Vec& dst, const Vec& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

}  // namespace rb3lie
