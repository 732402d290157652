#pragma once

// Linear maps of the left space F^n as n x n matrices. Column j holds the
// coordinates of U(e_j), so U(x)_i = sum_j x_j M_ij (scalars stay on the left).

#include <span>
#include <string>
#include <vector>

#include "hos/orthosets/projective.hpp"

namespace hos {

template <StarField S>
class OrthogonalMap {
 public:
  using traits = scalar_traits<S>;
  using Matrix = std::vector<std::vector<S>>;

  /// Rows of the matrix; not checked for orthogonality (see verify_orthogonal).
  explicit OrthogonalMap(Matrix rows) : m_(std::move(rows)) {
    for (const auto& r : m_)
      if (r.size() != m_.size()) throw DomainError("matrix must be square");
  }

  static OrthogonalMap identity(std::size_t n) {
    Matrix m(n, std::vector<S>(n, traits::zero()));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = traits::one();
    return OrthogonalMap(std::move(m));
  }

  /// The map sending e_j to columns[j].
  static OrthogonalMap from_columns(std::span<const Vector<S>> columns) {
    std::size_t n = columns.size();
    Matrix m(n, std::vector<S>(n, traits::zero()));
    for (std::size_t j = 0; j < n; ++j) {
      if (columns[j].size() != n) throw DomainError("matrix must be square");
      for (std::size_t i = 0; i < n; ++i) m[i][j] = columns[j][i];
    }
    return OrthogonalMap(std::move(m));
  }

  std::size_t dimension() const { return m_.size(); }
  const Matrix& rows() const { return m_; }
  const S& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

  Vector<S> column(std::size_t j) const {
    Vector<S> c(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) c[i] = m_[i][j];
    return c;
  }

  Vector<S> apply(const Vector<S>& x) const {
    if (x.size() != dimension()) throw DomainError("dimension mismatch");
    Vector<S> y(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) y[i] = traits::dot(x.coords(), m_[i]);
    return y;
  }

  /// The form-adjoint: conjugate transpose.
  OrthogonalMap adjoint() const {
    std::size_t n = dimension();
    Matrix a(n, std::vector<S>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = traits::star(m_[j][i]);
    return OrthogonalMap(std::move(a));
  }

  /// (U * V)(x) = U(V(x)).
  friend OrthogonalMap operator*(const OrthogonalMap& u, const OrthogonalMap& v) {
    std::size_t n = u.dimension();
    if (v.dimension() != n) throw DomainError("dimension mismatch");
    Matrix w(n, std::vector<S>(n, traits::zero()));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<S> col(n);
      for (std::size_t k = 0; k < n; ++k) col[k] = v.m_[k][j];
      for (std::size_t i = 0; i < n; ++i) w[i][j] = traits::dot(col, u.m_[i]);
    }
    return OrthogonalMap(std::move(w));
  }

  friend bool operator==(const OrthogonalMap& a, const OrthogonalMap& b) {
    if (a.dimension() != b.dimension()) return false;
    for (std::size_t i = 0; i < a.dimension(); ++i)
      for (std::size_t j = 0; j < a.dimension(); ++j)
        if (!(a.m_[i][j] == b.m_[i][j])) return false;
    return true;
  }

  bool is_identity() const { return *this == identity(dimension()); }

  /// Row-major: "[[a, b], [c, d]]".
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (i) s += ", ";
      s += "[";
      for (std::size_t j = 0; j < dimension(); ++j) {
        if (j) s += ", ";
        s += traits::to_string(m_[i][j]);
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  Matrix m_;
};

template <StarField S>
OrthogonalMap<S> compose(const OrthogonalMap<S>& u, const OrthogonalMap<S>& v) {
  return u * v;
}

/// <U e_i, U e_j> = delta_ij for all i, j, and U^+ U = U U^+ = I.
template <StarField S>
bool verify_orthogonal(const OrthogonalMap<S>& u) {
  using T = scalar_traits<S>;
  std::size_t n = u.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      S g = T::zero();
      for (std::size_t k = 0; k < n; ++k) g = g + u(k, i) * T::star(u(k, j));
      if (!(g == (i == j ? T::one() : T::zero()))) return false;
    }
  OrthogonalMap<S> a = u.adjoint();
  return (a * u).is_identity() && (u * a).is_identity();
}

template <StarField S>
ProjectivePoint<S> apply_point(const OrthogonalMap<S>& u, const ProjectivePoint<S>& e) {
  return ProjectivePoint<S>(u.apply(e.rep()));
}

/// U(M) as a subspace.
template <StarField S>
Subspace<S> apply_subspace(const OrthogonalMap<S>& u, const Subspace<S>& m) {
  std::vector<Vector<S>> img;
  for (const auto& b : m.basis()) img.push_back(u.apply(b));
  return Subspace<S>::span(img, m.ambient_dimension());
}

/// True if U(x) = x for every x in M.
template <StarField S>
bool fixes_pointwise(const OrthogonalMap<S>& u, const Subspace<S>& m) {
  for (const auto& b : m.basis())
    if (!(u.apply(b) == b)) return false;
  return true;
}

/// The map x -> x + sum_i <x, s_i> (t_i - s_i), for orthonormal families s and t
/// spanning the same subspace W: it sends each s_i to t_i and fixes W-perp.
template <StarField S>
OrthogonalMap<S> frame_change(std::size_t n, std::span<const Vector<S>> s, std::span<const Vector<S>> t) {
  using T = scalar_traits<S>;
  if (s.size() != t.size()) throw DomainError("frames differ in size");
  std::vector<Vector<S>> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Vector<S> c = Vector<S>::unit(n, j);
    for (std::size_t i = 0; i < s.size(); ++i) {
      S coef = T::star(s[i][j]);
      if (!T::is_zero(coef)) c = c + coef * (t[i] - s[i]);
    }
    cols.push_back(std::move(c));
  }
  return OrthogonalMap<S>::from_columns(cols);
}

}  // namespace hos
