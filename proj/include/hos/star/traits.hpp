#pragma once

// Uniform interface to the two scalar kinds used by the linear-algebra layer:
// tower elements with the identity involution and rational quaternions with
// conjugation. Both kinds are Pythagorean and formally real.
//
// `context` carries whatever a Pythagorean step may grow. For towers it is the
// tower everything is expressed in; hypot may replace it by an extension.

#include <span>
#include <string>
#include <variant>

#include "hos/fields/square.hpp"
#include "hos/star/four_square.hpp"

namespace hos {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<FieldElement> {
  using context = Tower;
  static constexpr bool commutative = true;
  static constexpr const char* kind = "tower";

  static FieldElement zero() { return FieldElement(); }
  static FieldElement one() { return FieldElement(1); }
  static FieldElement from_rational(const Rational& q) { return FieldElement(q); }
  static FieldElement star(const FieldElement& x) { return x; }
  static bool is_zero(const FieldElement& x) { return x.is_zero(); }
  static FieldElement inverse(const FieldElement& x) { return x.inverse(); }

  static context make_context() { return Tower::rationals(); }
  static void absorb(context& ctx, const FieldElement& x) { ctx = detail::common_tower(ctx, x.tower()); }
  static FieldElement in_context(const FieldElement& x, const context& ctx) { return x.lift(ctx); }

  /// gamma with gamma gamma* = sum t t*, possibly extending ctx.
  static FieldElement hypot(context& ctx, std::span<const FieldElement> terms) {
    HypotResult h = hypot_all(terms, ctx);
    ctx = h.tower;
    return h.value;
  }

  static FieldElement dot(std::span<const FieldElement> a, std::span<const FieldElement> b) { return hos::dot(a, b); }

  static std::string to_string(const FieldElement& x) { return x.to_string(); }
};

template <>
struct scalar_traits<Quaternion> {
  using context = std::monostate;
  static constexpr bool commutative = false;
  static constexpr const char* kind = "quaternion";

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(1); }
  static Quaternion from_rational(const Rational& q) { return Quaternion(q); }
  static Quaternion star(const Quaternion& x) { return x.star(); }
  static bool is_zero(const Quaternion& x) { return x.is_zero(); }
  static Quaternion inverse(const Quaternion& x) { return x.inverse(); }

  static context make_context() { return {}; }
  static void absorb(context&, const Quaternion&) {}
  static Quaternion in_context(const Quaternion& x, const context&) { return x; }

  static Quaternion hypot(context&, std::span<const Quaternion> terms) { return quat_hypot_all(terms); }

  /// sum a_i b_i, each product taken in that order.
  static Quaternion dot(std::span<const Quaternion> a, std::span<const Quaternion> b) {
    Quaternion acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
  }

  static std::string to_string(const Quaternion& x) { return x.to_string(); }
};

template <class S>
concept StarField = requires(const S& x) {
  typename scalar_traits<S>::context;
  { scalar_traits<S>::star(x) } -> std::convertible_to<S>;
  { scalar_traits<S>::is_zero(x) } -> std::convertible_to<bool>;
  { x * x } -> std::convertible_to<S>;
  { x + x } -> std::convertible_to<S>;
  { x - x } -> std::convertible_to<S>;
};

}  // namespace hos
