#pragma once

// Coordinate vectors in F^n with the standard Hermitian form
// <u, v> = u_1 v_1* + ... + u_n v_n*. F^n is a left vector space: scalars act
// from the left, so <alpha u, w> = alpha <u, w>.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hos/star/traits.hpp"

namespace hos {

template <StarField S>
class Vector {
 public:
  using scalar_type = S;
  using traits = scalar_traits<S>;

  Vector() = default;
  explicit Vector(std::size_t n) : coords_(n, traits::zero()) {}
  Vector(std::vector<S> coords) : coords_(std::move(coords)) {}  // NOLINT
  Vector(std::initializer_list<S> coords) : coords_(coords) {}

  /// The i-th standard basis vector of F^n.
  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v.coords_[i] = traits::one();
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  S& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<S>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!traits::is_zero(c)) return false;
    return true;
  }

  Vector operator-() const {
    Vector r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend Vector operator+(const Vector& u, const Vector& v) {
    check_same_dimension(u, v);
    Vector r(u);
    for (std::size_t i = 0; i < r.size(); ++i) r.coords_[i] = r.coords_[i] + v.coords_[i];
    return r;
  }

  friend Vector operator-(const Vector& u, const Vector& v) {
    check_same_dimension(u, v);
    Vector r(u);
    for (std::size_t i = 0; i < r.size(); ++i) r.coords_[i] = r.coords_[i] - v.coords_[i];
    return r;
  }

  /// Left scalar multiplication.
  friend Vector operator*(const S& alpha, const Vector& v) {
    Vector r(v);
    for (auto& c : r.coords_) c = alpha * c;
    return r;
  }

  friend bool operator==(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (!(u.coords_[i] == v.coords_[i])) return false;
    return true;
  }

  /// "(x1, x2, ...)".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += traits::to_string(coords_[i]);
    }
    return s + ")";
  }

  static void check_same_dimension(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw DomainError("dimension mismatch");
  }

 private:
  std::vector<S> coords_;
};

/// Standard form sum u_i v_i*.
template <StarField S>
S inner(const Vector<S>& u, const Vector<S>& v) {
  Vector<S>::check_same_dimension(u, v);
  std::vector<S> vs(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) vs[i] = scalar_traits<S>::star(v[i]);
  return scalar_traits<S>::dot(u.coords(), vs);
}

/// <u, u>; zero exactly for the zero vector.
template <StarField S>
S length(const Vector<S>& u) {
  return inner(u, u);
}

template <StarField S>
bool orthogonal(const Vector<S>& u, const Vector<S>& v) {
  return scalar_traits<S>::is_zero(inner(u, v));
}

/// Context holding every coordinate of the given vectors.
template <StarField S>
typename scalar_traits<S>::context context_of(std::span<const Vector<S>> vs) {
  auto ctx = scalar_traits<S>::make_context();
  for (const auto& v : vs)
    for (const auto& c : v) scalar_traits<S>::absorb(ctx, c);
  return ctx;
}

/// Re-expresses every coordinate in ctx (a no-op for quaternions).
template <StarField S>
Vector<S> in_context(const Vector<S>& v, const typename scalar_traits<S>::context& ctx) {
  std::vector<S> c;
  c.reserve(v.size());
  for (const auto& x : v) c.push_back(scalar_traits<S>::in_context(x, ctx));
  return Vector<S>(std::move(c));
}

/// Unit vector spanning the same line: gamma^-1 u with gamma gamma* = <u, u>.
template <StarField S>
Vector<S> normalize(const Vector<S>& u, typename scalar_traits<S>::context& ctx) {
  if (u.is_zero()) throw DomainError("cannot normalize the zero vector");
  for (const auto& c : u) scalar_traits<S>::absorb(ctx, c);
  S gamma = scalar_traits<S>::hypot(ctx, u.coords());
  return in_context(scalar_traits<S>::inverse(gamma) * u, ctx);
}

template <StarField S>
Vector<S> normalize(const Vector<S>& u) {
  auto ctx = context_of<S>(std::span(&u, 1));
  return normalize(u, ctx);
}

/// v minus its components along the orthonormal family `basis`.
template <StarField S>
Vector<S> project_out(const Vector<S>& v, std::span<const Vector<S>> basis) {
  Vector<S> w = v;
  for (const auto& e : basis) w = w - inner(v, e) * e;
  return w;
}

/// Appends to `orthonormal` the normalized components of `vs` that are not yet
/// spanned, skipping dependent ones. Returns how many were added.
template <StarField S>
std::size_t extend_orthonormal(std::vector<Vector<S>>& orthonormal, std::span<const Vector<S>> vs,
                               typename scalar_traits<S>::context& ctx) {
  std::size_t added = 0;
  for (const auto& v : vs) {
    Vector<S> w = project_out<S>(v, orthonormal);
    if (w.is_zero()) continue;
    orthonormal.push_back(normalize(w, ctx));
    ++added;
  }
  for (auto& e : orthonormal) e = in_context(e, ctx);
  return added;
}

/// Orthonormal family with the same span as every prefix of `vs`; normalizes as it
/// goes. Throws DomainError on dependent input.
template <StarField S>
std::vector<Vector<S>> gram_schmidt(std::span<const Vector<S>> vs, typename scalar_traits<S>::context& ctx) {
  std::vector<Vector<S>> out;
  for (const auto& v : vs) {
    if (extend_orthonormal<S>(out, std::span(&v, 1), ctx) == 0)
      throw DomainError("gram_schmidt: input vectors are linearly dependent");
  }
  return out;
}

template <StarField S>
std::vector<Vector<S>> gram_schmidt(std::span<const Vector<S>> vs) {
  auto ctx = context_of<S>(vs);
  return gram_schmidt(vs, ctx);
}

template <StarField S>
std::vector<Vector<S>> gram_schmidt(const std::vector<Vector<S>>& vs) {
  return gram_schmidt(std::span<const Vector<S>>(vs));
}

}  // namespace hos
