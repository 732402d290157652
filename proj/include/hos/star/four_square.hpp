#pragma once

// Lagrange four-square decompositions and the Pythagorean step for rational
// quaternions.

#include <algorithm>
#include <array>
#include <optional>
#include <span>

#include "hos/star/quaternion.hpp"

namespace hos {

namespace detail {

// n is a sum of three squares iff it is not of the form 4^a (8b + 7).
inline bool is_three_square(Integer n) {
  if (n == 0) return true;
  while (mpz_divisible_ui_p(n.get_mpz_t(), 4)) n /= 4;
  Integer r = n % 8;
  return r != 7;
}

inline Integer ceil_sqrt(const Integer& n) {
  Integer s = isqrt(n);
  if (s * s < n) s += 1;
  return s;
}

// x^2 + y^2 = p for a prime p = 1 mod 4, via a square root of -1 and Euclid.
inline std::optional<std::array<Integer, 2>> prime_two_square(const Integer& p) {
  Integer c = 2;
  while (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) c += 1;
  Integer e = (p - 1) / 4, x;
  mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  Integer a = p, b = x;
  while (b * b > p) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  Integer r = p - b * b;
  if (!is_perfect_square(r)) return std::nullopt;
  return std::array<Integer, 2>{b, isqrt(r)};
}

// Two squares summing to n. Small n are searched exhaustively; large n only
// when n = 2^e q with q square or prime, otherwise nullopt.
inline std::optional<std::array<Integer, 2>> two_square(const Integer& n) {
  if (is_perfect_square(n)) return std::array<Integer, 2>{isqrt(n), 0};
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 34) {
    Integer low = ceil_sqrt(Integer((n + 1) / 2));
    for (Integer x = isqrt(n); x >= low; --x)
      if (is_perfect_square(n - x * x)) return std::array<Integer, 2>{x, isqrt(n - x * x)};
    return std::nullopt;
  }
  Integer q = n;
  unsigned e = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++e;
  }
  std::array<Integer, 2> r;
  if (is_perfect_square(q)) {
    r = {isqrt(q), 0};
  } else {
    if (q % 4 != 1 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) return std::nullopt;
    auto w = prime_two_square(q);
    if (!w) return std::nullopt;
    r = *w;
  }
  // (x + iy)(1 + i) doubles the norm
  for (unsigned k = 0; k < e; ++k) r = {r[0] - r[1], r[0] + r[1]};
  return std::array<Integer, 2>{abs(r[0]), abs(r[1])};
}

inline Integer strip_fours(Integer& n) {
  Integer scale = 1;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), 4)) {
    n /= 4;
    scale *= 2;
  }
  return scale;
}

inline std::optional<std::array<Integer, 3>> three_square(Integer n) {
  Integer scale = strip_fours(n);
  if (n % 8 == 7) return std::nullopt;
  for (Integer s = isqrt(n); s >= 0; --s) {
    if (auto t = two_square(n - s * s)) return std::array<Integer, 3>{s * scale, (*t)[0] * scale, (*t)[1] * scale};
  }
  return std::nullopt;
}

// s1 >= s2 >= s3 >= s4 >= 0 with sum of squares n. The largest square is
// peeled off greedily and the three-square remainder is solved after removing
// powers of 4, so representations forced to be highly even are found directly.
inline std::array<Integer, 4> integer_four_square(Integer n) {
  Integer scale = strip_fours(n);
  for (Integer s1 = isqrt(n); s1 >= 0; --s1) {
    auto t = three_square(n - s1 * s1);
    if (!t) continue;
    std::array<Integer, 4> out{s1 * scale, (*t)[0] * scale, (*t)[1] * scale, (*t)[2] * scale};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }
  throw Error("four-square search failed");  // unreachable by Lagrange's theorem
}

}  // namespace detail

/// Rationals s1 >= s2 >= s3 >= s4 >= 0 with s1^2 + s2^2 + s3^2 + s4^2 = r.
///
/// With r = p/q, N = pq = r q^2 is split as 4^e M, M is decomposed by search and
/// the result is scaled back by 2^e / q.
inline std::array<Rational, 4> four_square(const Rational& r) {
  if (r < 0) throw DomainError("four_square needs a nonnegative rational");
  Integer n = r.get_num() * r.get_den();
  Integer twos = 1;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), 4)) {
    n /= 4;
    twos *= 2;
  }
  auto s = detail::integer_four_square(n);
  std::array<Rational, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = Rational(s[i] * twos, r.get_den());
    out[i].canonicalize();
  }
  return out;
}

/// gamma with gamma gamma* = sum of the norms of `terms`, built from the
/// four-square witness of that sum.
inline Quaternion quat_hypot_all(std::span<const Quaternion> terms) {
  Rational total = 0;
  for (const auto& t : terms) total += t.norm();
  auto s = four_square(total);
  return {s[0], s[1], s[2], s[3]};
}

inline Quaternion quat_hypot(const Quaternion& alpha, const Quaternion& beta) {
  Quaternion terms[] = {alpha, beta};
  return quat_hypot_all(terms);
}

}  // namespace hos
