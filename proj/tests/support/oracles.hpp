#pragma once

// Reference implementations used only by the tests. They deliberately take
// different routes from the library code they check.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hos/hos.hpp"

namespace oracle {

using hos::FieldElement;
using hos::Integer;
using hos::Rational;
using hos::Tower;

// ---- tower arithmetic ----

using Coeffs = std::vector<Rational>;

/// Schoolbook product with four recursive products, no Karatsuba, no integer clearing.
inline Coeffs schoolbook(const Coeffs& a, const Coeffs& b, const Tower& t, std::size_t level) {
  if (level == 0) return {a[0] * b[0]};
  std::size_t h = a.size() / 2;
  Coeffs a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
  Coeffs b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
  Coeffs d = t.discriminant(level - 1).coeffs();
  Coeffs p00 = schoolbook(a0, b0, t, level - 1), p11 = schoolbook(a1, b1, t, level - 1);
  Coeffs p01 = schoolbook(a0, b1, t, level - 1), p10 = schoolbook(a1, b0, t, level - 1);
  Coeffs dp = schoolbook(d, p11, t, level - 1);
  Coeffs r(a.size());
  for (std::size_t i = 0; i < h; ++i) {
    r[i] = p00[i] + dp[i];
    r[h + i] = p01[i] + p10[i];
  }
  return r;
}

inline FieldElement schoolbook(const FieldElement& a, const FieldElement& b) {
  const Tower& t = a.tower().depth() >= b.tower().depth() ? a.tower() : b.tower();
  Coeffs ca = a.lift(t).coeffs(), cb = b.lift(t).coeffs();
  return FieldElement(t, schoolbook(ca, cb, t, t.depth()));
}

// ---- numeric evaluation ----

using Real = boost::multiprecision::cpp_bin_float_100;

inline Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

inline Real evaluate(const FieldElement& x);

inline Real generator_value(const Tower& t, std::size_t i) { return sqrt(evaluate(t.discriminant(i))); }

/// Value of x under the embedding sending each generator to the positive root.
inline Real evaluate(const FieldElement& x) {
  const Tower& t = x.tower();
  std::vector<Real> g;
  for (std::size_t i = 0; i < t.depth(); ++i) g.push_back(generator_value(t, i));
  Real sum = 0;
  for (std::size_t m = 0; m < x.coeffs().size(); ++m) {
    if (x.coeffs()[m] == 0) continue;
    Real term = to_real(x.coeffs()[m]);
    for (std::size_t i = 0; i < g.size(); ++i)
      if ((m >> i) & 1) term *= g[i];
    sum += term;
  }
  return sum;
}

/// Sign by high-precision evaluation; values closer to 0 than 1e-80 count as 0.
inline int numeric_sign(const FieldElement& x) {
  Real v = evaluate(x);
  if (abs(v) < Real("1e-80")) return 0;
  return v > 0 ? 1 : -1;
}

// ---- rational roots ----

inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Roots of b x^2 - a for q = a/b via the rational root theorem (small q only).
inline std::vector<Rational> rational_roots_of_square(const Rational& q) {
  std::vector<Rational> out;
  if (q == 0) return {Rational(0)};
  for (const auto& p : divisors(q.get_num()))
    for (const auto& s : divisors(q.get_den()))
      for (int sg : {1, -1}) {
        Rational x(sg * p, s);
        x.canonicalize();
        if (x * x == q) out.push_back(x);
      }
  return out;
}

// ---- finite orthosets ----

using Adjacency = std::vector<std::vector<std::size_t>>;

/// A^perp by scanning adjacency lists: x is kept when every member of A is a neighbour.
inline std::set<std::size_t> sweep(const Adjacency& adj, const std::set<std::size_t>& a) {
  std::set<std::size_t> out;
  for (std::size_t x = 0; x < adj.size(); ++x) {
    bool all = true;
    for (auto y : a) {
      bool found = false;
      for (auto z : adj[x]) found = found || z == y;
      all = all && found;
    }
    if (all) out.insert(x);
  }
  return out;
}

inline std::set<std::size_t> two_sweep_closure(const Adjacency& adj, const std::set<std::size_t>& a) {
  return sweep(adj, sweep(adj, a));
}

/// Largest pairwise-adjacent subset by enumerating every subset.
inline std::size_t clique_number(const Adjacency& adj) {
  std::size_t n = adj.size(), best = n > 0 ? 1 : 0;
  auto adjacent = [&](std::size_t x, std::size_t y) {
    for (auto z : adj[x])
      if (z == y) return true;
    return false;
  };
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1) pts.push_back(i);
    if (pts.size() <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) ok = adjacent(pts[i], pts[j]);
    if (ok) best = pts.size();
  }
  return best;
}

// ---- linear algebra over a commutative scalar ----

template <class S>
using Rows = std::vector<std::vector<S>>;

/// Gauss-Jordan elimination; returns the nonzero rows.
template <class S>
Rows<S> eliminate(Rows<S> m) {
  std::size_t rank = 0, cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && hos::scalar_traits<S>::is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    S inv = hos::scalar_traits<S>::inverse(m[rank][c]);
    for (auto& x : m[rank]) x = inv * x;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || hos::scalar_traits<S>::is_zero(m[r][c])) continue;
      S f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

/// Intersection of two row spaces by the Zassenhaus algorithm.
template <class S>
std::vector<hos::Vector<S>> zassenhaus_intersection(const std::vector<hos::Vector<S>>& a,
                                                    const std::vector<hos::Vector<S>>& b, std::size_t n) {
  Rows<S> m;
  for (const auto& v : a) {
    std::vector<S> row(v.coords());
    row.insert(row.end(), v.coords().begin(), v.coords().end());
    m.push_back(row);
  }
  for (const auto& v : b) {
    std::vector<S> row(v.coords());
    row.resize(2 * n, hos::scalar_traits<S>::zero());
    m.push_back(row);
  }
  std::vector<hos::Vector<S>> out;
  for (const auto& row : eliminate(m)) {
    bool left_zero = true;
    for (std::size_t i = 0; i < n; ++i) left_zero = left_zero && hos::scalar_traits<S>::is_zero(row[i]);
    if (left_zero) out.emplace_back(std::vector<S>(row.begin() + n, row.end()));
  }
  return out;
}

/// Null space of x -> (<x, b_1>, ..., <x, b_k>) for a commutative scalar.
template <class S>
std::vector<hos::Vector<S>> null_space(const std::vector<hos::Vector<S>>& bs, std::size_t n) {
  Rows<S> m;
  for (const auto& b : bs) m.push_back(b.coords());
  Rows<S> r = eliminate(m);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> pivot(n, false);
  for (const auto& row : r) {
    std::size_t c = 0;
    while (hos::scalar_traits<S>::is_zero(row[c])) ++c;
    pivot_of_row.push_back(c);
    pivot[c] = true;
  }
  std::vector<hos::Vector<S>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot[f]) continue;
    hos::Vector<S> v(n);
    v[f] = hos::scalar_traits<S>::one();
    for (std::size_t i = 0; i < r.size(); ++i) v[pivot_of_row[i]] = -r[i][f];
    out.push_back(v);
  }
  return out;
}

/// Rank of a vector family.
template <class S>
std::size_t rank(const std::vector<hos::Vector<S>>& vs) {
  Rows<S> m;
  for (const auto& v : vs) m.push_back(v.coords());
  return eliminate(m).size();
}

/// Matrix-vector product computed entry by entry from the rows.
template <class S>
hos::Vector<S> evaluate(const hos::OrthogonalMap<S>& u, const hos::Vector<S>& x) {
  std::size_t n = u.dimension();
  std::vector<S> out;
  for (std::size_t i = 0; i < n; ++i) {
    S acc = hos::scalar_traits<S>::zero();
    for (std::size_t j = 0; j < n; ++j) acc = acc + x[j] * u(i, j);
    out.push_back(acc);
  }
  return hos::Vector<S>(std::move(out));
}

/// Gram check computed entry by entry: sum_k M_ki M_kj* = delta_ij.
template <class S>
bool gram_identity(const hos::OrthogonalMap<S>& u) {
  using T = hos::scalar_traits<S>;
  std::size_t n = u.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      S acc = T::zero();
      for (std::size_t k = 0; k < n; ++k) acc = acc + u(k, i) * T::star(u(k, j));
      if (!(acc == (i == j ? T::one() : T::zero()))) return false;
    }
  return true;
}

}  // namespace oracle
