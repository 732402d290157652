#pragma once

// Exact rational helpers on top of GMP's mpq_class.

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "hos/error.hpp"

namespace hos {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

/// Canonical text: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q"; throws ParseError on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational '" + s + "'", 0); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string_view num = std::string_view(s).substr(0, slash);
  if (!digits_ok(num, true)) throw bad();
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer q = 1;
  if (slash != std::string::npos) {
    std::string_view den = std::string_view(s).substr(slash + 1);
    if (!digits_ok(den, false)) throw bad();
    q = Integer(std::string(den), 10);
    if (q == 0) throw DivisionByZero();
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Nonnegative square root of q if q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& p = q.get_num();
  const Integer& d = q.get_den();
  if (!is_perfect_square(p) || !is_perfect_square(d)) return std::nullopt;
  Rational r(isqrt(p), isqrt(d));
  r.canonicalize();
  return r;
}

/// 2^bits as a rational.
inline Rational pow2(unsigned long bits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, bits);
  return Rational(p);
}

/// Largest multiple of 2^-bits that is <= q.
inline Rational floor_dyadic(const Rational& q, unsigned long bits) {
  Integer scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Rational r(f, pow2(bits).get_num());
  r.canonicalize();
  return r;
}

/// Smallest multiple of 2^-bits that is >= q.
inline Rational ceil_dyadic(const Rational& q, unsigned long bits) {
  Integer scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  Rational r(c, pow2(bits).get_num());
  r.canonicalize();
  return r;
}

/// Dyadic lower bound for sqrt(q), q >= 0, accurate to 2^-bits.
inline Rational sqrt_lower(const Rational& q, unsigned long bits) {
  if (q <= 0) return 0;
  Rational scaled = q * pow2(2 * bits);
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(isqrt(n), pow2(bits).get_num());
  r.canonicalize();
  return r;
}

/// Dyadic upper bound for sqrt(q), q >= 0, accurate to 2^-bits.
inline Rational sqrt_upper(const Rational& q, unsigned long bits) {
  if (q <= 0) return 0;
  Rational scaled = q * pow2(2 * bits);
  Integer n;
  mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer s = isqrt(n);
  if (s * s < n) s += 1;
  Rational r(s, pow2(bits).get_num());
  r.canonicalize();
  return r;
}

}  // namespace hos
