#pragma once

// Sign determination under the real embedding that sends every generator to the
// positive square root of its discriminant.

#include <algorithm>
#include <span>
#include <vector>

#include "hos/fields/tower.hpp"

namespace hos {

struct Interval {
  Rational lo, hi;
};

namespace detail {

inline constexpr unsigned long kInitialSignPrecision = 32;

inline Interval widen(const Interval& x, unsigned long bits) {
  return {floor_dyadic(x.lo, bits), ceil_dyadic(x.hi, bits)};
}

inline Interval iadd(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

inline Interval imul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Interval eval_interval(std::span<const Rational> c, std::size_t level,
                              std::span<const Interval> gens, unsigned long bits) {
  if (level == 0) return {c[0], c[0]};
  std::size_t h = c.size() / 2;
  Interval lo = eval_interval(c.first(h), level - 1, gens, bits);
  if (all_zero(c.subspan(h))) return lo;
  Interval hi = eval_interval(c.subspan(h), level - 1, gens, bits);
  return widen(iadd(lo, imul(hi, gens[level - 1])), bits);
}

/// Enclosures of r_1..r_k with dyadic endpoints of the given precision.
inline std::vector<Interval> generator_intervals(const Tower& t, unsigned long bits) {
  std::vector<Interval> gens;
  gens.reserve(t.depth());
  for (std::size_t i = 0; i < t.depth(); ++i) {
    Interval d = eval_interval(t.discriminant(i).coeffs(), i, gens, bits);
    gens.push_back({sqrt_lower(d.lo, bits), sqrt_upper(d.hi, bits)});
  }
  return gens;
}

}  // namespace detail

/// Rational enclosure of x at roughly `bits` bits of working precision.
inline Interval enclose(const FieldElement& x, unsigned long bits) {
  auto gens = detail::generator_intervals(x.tower(), bits);
  return detail::eval_interval(x.coeffs(), x.tower().depth(), gens, bits);
}

/// -1, 0 or +1. Zero is decided exactly from the coefficients; otherwise the
/// enclosure is refined, doubling precision, until it excludes zero.
inline int sign(const FieldElement& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.constant());
  for (unsigned long bits = detail::kInitialSignPrecision;; bits *= 2) {
    Interval iv = enclose(x, bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
}

inline bool operator<(const FieldElement& a, const FieldElement& b) { return sign(b - a) > 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return b < a; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return !(b < a); }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return !(a < b); }

inline FieldElement abs(const FieldElement& x) { return sign(x) < 0 ? -x : x; }

/// Midpoint of a 64-bit enclosure, for display only.
inline double to_double(const FieldElement& x) {
  Interval iv = enclose(x, 64);
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

}  // namespace hos
