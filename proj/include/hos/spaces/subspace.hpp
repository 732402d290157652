#pragma once

// Subspaces of F^n stored as row-reduced echelon bases. Rows are reduced with
// left multiplications only (the row space of a left vector space), pivots are
// the leftmost nonzero entries and are scaled to 1, so equal subspaces have
// identical bases.

#include <span>
#include <vector>

#include "hos/spaces/vector.hpp"

namespace hos {

namespace detail {

template <StarField S>
std::vector<Vector<S>> row_reduce(std::vector<Vector<S>> rows, std::size_t n,
                                  std::vector<std::size_t>* pivots = nullptr) {
  using T = scalar_traits<S>;
  std::size_t next = 0;
  if (pivots) pivots->clear();
  for (std::size_t col = 0; col < n && next < rows.size(); ++col) {
    std::size_t r = next;
    while (r < rows.size() && T::is_zero(rows[r][col])) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[next], rows[r]);
    rows[next] = T::inverse(rows[next][col]) * rows[next];
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == next || T::is_zero(rows[o][col])) continue;
      rows[o] = rows[o] - rows[o][col] * rows[next];
    }
    if (pivots) pivots->push_back(col);
    ++next;
  }
  rows.resize(next);
  return rows;
}

}  // namespace detail

template <StarField S>
class Subspace {
 public:
  using traits = scalar_traits<S>;

  /// The zero subspace of F^n.
  explicit Subspace(std::size_t n) : n_(n) {}

  static Subspace span(std::span<const Vector<S>> vs, std::size_t n) {
    Subspace m(n);
    std::vector<Vector<S>> rows;
    for (const auto& v : vs) {
      if (v.size() != n) throw DomainError("dimension mismatch");
      rows.push_back(v);
    }
    m.basis_ = detail::row_reduce<S>(std::move(rows), n, &m.pivots_);
    return m;
  }

  static Subspace span(const std::vector<Vector<S>>& vs, std::size_t n) {
    return span(std::span<const Vector<S>>(vs), n);
  }

  static Subspace full(std::size_t n) {
    std::vector<Vector<S>> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(Vector<S>::unit(n, i));
    return span(e, n);
  }

  const std::vector<Vector<S>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient_dimension() const { return n_; }

  bool contains(const Vector<S>& v) const {
    if (v.size() != n_) throw DomainError("dimension mismatch");
    // Reduce v against the echelon basis; it lies in the span iff nothing remains.
    Vector<S> w = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const S& c = w[pivots_[r]];
      if (!traits::is_zero(c)) w = w - c * basis_[r];
    }
    return w.is_zero();
  }

  bool contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_;
  std::vector<Vector<S>> basis_;
  std::vector<std::size_t> pivots_;
};

template <StarField S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dimension() != b.ambient_dimension()) throw DomainError("dimension mismatch");
  std::vector<Vector<S>> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace<S>::span(rows, a.ambient_dimension());
}

/// M-perp = { x : <x, b> = 0 for every b in M }.
///
/// Conjugating <x, b> = 0 gives sum_i b_i x_i* = 0, so y = x* (coordinatewise)
/// solves B y = 0 with y acting from the right. That null space is read off the
/// reduced echelon form; conjugating back gives M-perp.
template <StarField S>
Subspace<S> orthocomplement(const Subspace<S>& m) {
  using T = scalar_traits<S>;
  std::size_t n = m.ambient_dimension();
  const auto& rows = m.basis();
  const auto& piv = m.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector<S>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> y(n);
    y[f] = T::one();
    for (std::size_t r = 0; r < rows.size(); ++r) y[piv[r]] = -rows[r][f];
    Vector<S> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = T::star(y[i]);
    out.push_back(std::move(x));
  }
  return Subspace<S>::span(out, n);
}

/// M1 intersect M2 = (M1-perp + M2-perp)-perp, valid because finite-dimensional
/// subspaces split.
template <StarField S>
Subspace<S> intersection(const Subspace<S>& a, const Subspace<S>& b) {
  return orthocomplement(sum(orthocomplement(a), orthocomplement(b)));
}

/// Orthonormal basis of M (normalizing Gram-Schmidt over the echelon basis).
template <StarField S>
std::vector<Vector<S>> orthonormal_basis(const Subspace<S>& m, typename scalar_traits<S>::context& ctx) {
  return gram_schmidt<S>(std::span<const Vector<S>>(m.basis()), ctx);
}

}  // namespace hos
