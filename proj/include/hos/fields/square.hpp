#pragma once

// Square detection, validated adjunction and the Pythagorean closure step.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hos/fields/sign.hpp"
#include "hos/fields/tower.hpp"

namespace hos {

namespace detail {

// Some square root of x in its own tower, sign unnormalized.
//
// x = a + b r with r^2 = d is a square in K(r) iff either b = 0 and one of a, a/d
// is a square in K, or b != 0, the norm a^2 - b^2 d is a square c^2 in K and one of
// (a + c)/2, (a - c)/2 is a square y^2 in K; then sqrt(x) = y + (b / 2y) r.
inline std::optional<FieldElement> sqrt_any(const FieldElement& x) {
  const Tower& t = x.tower();
  if (x.is_zero()) return x;
  if (t.depth() == 0) {
    auto r = rational_sqrt(x.constant());
    if (!r) return std::nullopt;
    return FieldElement::rational(*r, t);
  }
  auto [a, b] = x.split();
  const FieldElement& d = t.discriminant(t.depth() - 1);
  if (b.is_zero()) {
    if (auto y = sqrt_any(a)) return y->lift(t);
    if (auto z = sqrt_any(a / d)) return FieldElement::join(FieldElement(a.tower()), *z, t);
    return std::nullopt;
  }
  auto c = sqrt_any(a * a - b * b * d);
  if (!c) return std::nullopt;
  const Rational half(1, 2);
  for (const FieldElement& cand : {(a + *c) * half, (a - *c) * half}) {
    if (cand.is_zero()) continue;
    if (auto y = sqrt_any(cand)) {
      FieldElement z = b / (*y * FieldElement(2));
      return FieldElement::join(*y, z, t);
    }
  }
  return std::nullopt;
}

/// q = m^2 * D with D an integer stripped of the small square factors found by
/// trial division. Not a full factorization; D is only used as a nicer discriminant.
inline std::pair<Rational, Integer> square_part(const Rational& q) {
  Integer n = q.get_num() * q.get_den();
  Integer m = 1;
  for (unsigned long p = 2; p < 2000; p += (p == 2 ? 1 : 2)) {
    Integer pp = p * p;
    if (pp > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      m *= p;
    }
  }
  if (is_perfect_square(n)) {
    Integer s = isqrt(n);
    m *= s;
    n = 1;
  }
  Rational scale(m, q.get_den());
  scale.canonicalize();
  return {scale, n};
}

}  // namespace detail

/// The nonnegative square root of x in x's tower, if x is a square there.
inline std::optional<FieldElement> is_square(const FieldElement& x) {
  auto r = detail::sqrt_any(x);
  if (r && sign(*r) < 0) r = -*r;
  return r;
}

/// Appends sqrt(d) to `base`. d must be positive and not a square in `base`.
inline Tower adjoin(const Tower& base, const FieldElement& d,
                    std::optional<Provenance> provenance = std::nullopt) {
  FieldElement lifted = d.lift(base);
  if (sign(lifted) <= 0) throw DomainError("discriminant must be positive");
  if (is_square(lifted)) throw DomainError("discriminant is already a square");
  return adjoin_unchecked(base, std::move(lifted), std::move(provenance));
}

struct HypotResult {
  FieldElement value;
  Tower tower;
};

/// gamma >= 0 with gamma^2 = sum of squares of `terms`, computed in `within` (which
/// must contain every term). If the sum is not a square there, one generator is
/// adjoined and gamma = scale * r_new.
inline HypotResult hypot_all(std::span<const FieldElement> terms, const Tower& within) {
  FieldElement s(within);
  for (const auto& t : terms) s += t * t;
  s = s.lift(within);
  if (auto r = is_square(s)) return {*r, within};
  if (within.depth() >= within.depth_limit()) throw DepthLimitExceeded(within.depth_limit());
  Provenance prov;
  prov.terms.assign(terms.begin(), terms.end());
  FieldElement d = s;
  if (s.is_rational()) {
    auto [scale, core] = detail::square_part(s.constant());
    prov.scale = scale;
    d = FieldElement::rational(Rational(core), within);
  }
  Rational scale = prov.scale;
  Tower extended = adjoin_unchecked(within, d, std::move(prov));
  FieldElement gamma = FieldElement::generator(extended, extended.depth() - 1) * FieldElement(scale);
  return {gamma, extended};
}

/// Tower containing both operands, or TowerMismatch.
inline Tower common_tower(const FieldElement& a, const FieldElement& b) {
  return detail::common_tower(a.tower(), b.tower());
}

inline HypotResult hypot(const FieldElement& a, const FieldElement& b) {
  FieldElement terms[] = {a, b};
  return hypot_all(terms, common_tower(a, b));
}

}  // namespace hos
