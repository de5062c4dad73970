#pragma once

// Exact rational scalars.
//
// Rat wraps GMP's mpq_class.  Every value handed out by this toolkit is in
// canonical form: numerator and denominator coprime, denominator positive.
// GMP maintains that invariant for all arithmetic; the string reader below
// enforces it for external input as well.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline bool rat_is_zero(const Rat& x) { return sgn(x) == 0; }

// mpq_class(p, q) does not reduce p/q, and GMP arithmetic and comparison
// assume canonical operands — always build fractions through this helper.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Serialized form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

// Accepts an optional leading '-', a digit run, and an optional "/<digits>"
// suffix.  Anything else (floats, whitespace, empty fields, zero denominator)
// is rejected.  The result is canonicalized.
inline Rat rat_from_string(const std::string& s) {
  std::size_t i = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("bad rational literal: \"" + s + "\"");
  };
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
  if (digits == 0) fail();
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0 || i != s.size()) fail();
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) fail();
  if (sgn(r.get_den()) == 0) fail();
  r.canonicalize();
  return r;
}

// --- small dense-vector helpers (exact arithmetic throughout) ---

inline Vec vec_zero(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

inline bool vec_is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline void vec_add_to(Vec& dst, const Vec& src) {
  if (dst.size() != src.size()) throw std::invalid_argument("vec_add_to: length mismatch");
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (sgn(src[i]) != 0) dst[i] += src[i];
}

// dst += c * src, skipping zero terms.
inline void vec_axpy(Vec& dst, const Rat& c, const Vec& src) {
  if (dst.size() != src.size()) throw std::invalid_argument("vec_axpy: length mismatch");
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (sgn(src[i]) != 0) dst[i] += c * src[i];
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (sgn(b[i]) != 0) r[i] -= b[i];
  return r;
}

inline Vec vec_scale(const Rat& c, const Vec& v) {
  Vec r(v.size(), Rat(0));
  if (sgn(c) == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) r[i] = c * v[i];
  return r;
}

inline Rat vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_dot: length mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace hopfkit
