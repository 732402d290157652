#pragma once

// A scalar tagged with its kind, for callers (the CLI) that pick the scalar kind
// at run time. Mixing kinds in one operation is a DomainError.

#include <string>
#include <variant>

#include "hos/star/traits.hpp"

namespace hos {

enum class ScalarKind { tower, quaternion };

inline const char* kind_name(ScalarKind k) { return k == ScalarKind::tower ? "tower" : "quaternion"; }

class StarScalar {
 public:
  StarScalar(FieldElement x) : value_(std::move(x)) {}  // NOLINT
  StarScalar(Quaternion q) : value_(std::move(q)) {}    // NOLINT

  ScalarKind kind() const {
    return std::holds_alternative<FieldElement>(value_) ? ScalarKind::tower : ScalarKind::quaternion;
  }
  const FieldElement& as_tower() const { return std::get<FieldElement>(value_); }
  const Quaternion& as_quaternion() const { return std::get<Quaternion>(value_); }

  StarScalar star() const {
    return std::visit([](const auto& x) -> StarScalar { return scalar_traits<std::decay_t<decltype(x)>>::star(x); },
                      value_);
  }

  /// x x*: x^2 for tower elements, a^2 + b^2 + c^2 + d^2 for quaternions.
  StarScalar norm() const { return *this * star(); }

  bool is_zero() const {
    return std::visit([](const auto& x) { return scalar_traits<std::decay_t<decltype(x)>>::is_zero(x); },
                      value_);
  }

  StarScalar inverse() const {
    return std::visit(
        [](const auto& x) -> StarScalar { return scalar_traits<std::decay_t<decltype(x)>>::inverse(x); },
        value_);
  }

  std::string to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, value_);
  }

  friend StarScalar operator+(const StarScalar& x, const StarScalar& y) {
    return binary(x, y, [](const auto& a, const auto& b) { return a + b; });
  }
  friend StarScalar operator-(const StarScalar& x, const StarScalar& y) {
    return binary(x, y, [](const auto& a, const auto& b) { return a - b; });
  }
  friend StarScalar operator*(const StarScalar& x, const StarScalar& y) {
    return binary(x, y, [](const auto& a, const auto& b) { return a * b; });
  }
  friend bool operator==(const StarScalar& x, const StarScalar& y) {
    if (x.kind() != y.kind()) return false;
    return x.value_ == y.value_;
  }

 private:
  template <class Op>
  static StarScalar binary(const StarScalar& x, const StarScalar& y, Op op) {
    if (x.kind() != y.kind()) throw DomainError("scalar kinds differ");
    if (x.kind() == ScalarKind::tower) return op(x.as_tower(), y.as_tower());
    return op(x.as_quaternion(), y.as_quaternion());
  }

  std::variant<FieldElement, Quaternion> value_;
};

}  // namespace hos
