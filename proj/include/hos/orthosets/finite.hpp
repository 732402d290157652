#pragma once

// Finite orthosets (X, perp) with |X| <= 64, subsets as bitmasks.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hos/error.hpp"
#include "hos/fields/io.hpp"

namespace hos {

using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxFiniteOrthoset = 64;
inline constexpr std::size_t kMaxRankSearch = 32;

class FiniteOrthoset {
 public:
  /// Builds from adjacency lists; neighbours[x] lists the points orthogonal to x.
  /// Throws DomainError unless the relation is symmetric and irreflexive.
  explicit FiniteOrthoset(const std::vector<std::vector<std::size_t>>& neighbours) : n_(neighbours.size()) {
    if (n_ > kMaxFiniteOrthoset) throw DomainError("finite orthosets are limited to 64 points");
    adj_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (auto y : neighbours[x]) {
        if (y >= n_) throw DomainError("point " + std::to_string(y) + " out of range");
        adj_[x] |= bit(y);
      }
    for (std::size_t x = 0; x < n_; ++x) {
      if (adj_[x] & bit(x)) throw DomainError("relation is not irreflexive at " + std::to_string(x));
      for (std::size_t y = 0; y < n_; ++y)
        if (((adj_[x] >> y) & 1) != ((adj_[y] >> x) & 1))
          throw DomainError("relation is not symmetric at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  }

  /// (X, !=): every two distinct points orthogonal.
  static FiniteOrthoset boolean(std::size_t n) {
    std::vector<std::vector<std::size_t>> nb(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y) nb[x].push_back(y);
    return FiniteOrthoset(nb);
  }

  /// (X, empty relation).
  static FiniteOrthoset edgeless(std::size_t n) { return FiniteOrthoset(std::vector<std::vector<std::size_t>>(n)); }

  std::size_t size() const { return n_; }
  PointSet all() const { return n_ == 64 ? ~PointSet{0} : (PointSet{1} << n_) - 1; }
  PointSet neighbours(std::size_t x) const { return adj_.at(x); }
  bool perp(std::size_t x, std::size_t y) const { return (adj_.at(x) >> y) & 1; }

  /// A-perp: points orthogonal to every member of A.
  PointSet perp_set(PointSet a) const {
    PointSet out = all();
    for (std::size_t x = 0; x < n_; ++x)
      if ((a >> x) & 1) out &= adj_[x];
    return out;
  }

  std::vector<std::vector<std::size_t>> adjacency_lists() const {
    std::vector<std::vector<std::size_t>> out(n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (perp(x, y)) out[x].push_back(y);
    return out;
  }

  friend bool operator==(const FiniteOrthoset&, const FiniteOrthoset&) = default;

  static PointSet bit(std::size_t x) { return PointSet{1} << x; }

 private:
  std::size_t n_;
  std::vector<PointSet> adj_;
};

/// A-perp-perp.
inline PointSet finite_closure(const FiniteOrthoset& x, PointSet a) {
  if (a & ~x.all()) throw DomainError("subset is not contained in X");
  return x.perp_set(x.perp_set(a));
}

enum class OrthosetFamily { boolean, edgeless, other };

inline const char* family_name(OrthosetFamily f) {
  switch (f) {
    case OrthosetFamily::boolean: return "boolean";
    case OrthosetFamily::edgeless: return "edgeless";
    default: return "other";
  }
}

struct Classification {
  OrthosetFamily family;
  std::size_t rank;
};

namespace detail {

// Bron-Kerbosch with pivoting over bitmasks.
inline void max_clique(const FiniteOrthoset& x, PointSet r, PointSet p, PointSet q, std::size_t& best) {
  if (!p && !q) {
    best = std::max<std::size_t>(best, std::popcount(r));
    return;
  }
  if (static_cast<std::size_t>(std::popcount(r) + std::popcount(p)) <= best) return;
  PointSet pu = p | q;
  std::size_t u = std::countr_zero(pu);
  PointSet cand = p & ~x.neighbours(u);
  while (cand) {
    std::size_t v = std::countr_zero(cand);
    cand &= cand - 1;
    max_clique(x, r | FiniteOrthoset::bit(v), p & x.neighbours(v), q & x.neighbours(v), best);
    p &= ~FiniteOrthoset::bit(v);
    q |= FiniteOrthoset::bit(v);
  }
}

}  // namespace detail

/// Largest set of mutually orthogonal points (0 for the empty orthoset).
inline std::size_t rank(const FiniteOrthoset& x) {
  if (x.size() > kMaxRankSearch) throw DomainError("rank search is limited to 32 points");
  std::size_t best = 0;
  detail::max_clique(x, 0, x.all(), 0, best);
  return best;
}

/// Boolean is tested first, so one-point orthosets count as Boolean.
inline Classification classify(const FiniteOrthoset& x) {
  std::size_t r = rank(x);
  bool boolean = true, edgeless = true;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x.neighbours(p) != (x.all() & ~FiniteOrthoset::bit(p))) boolean = false;
    if (x.neighbours(p) != 0) edgeless = false;
  }
  OrthosetFamily f = boolean ? OrthosetFamily::boolean : edgeless ? OrthosetFamily::edgeless : OrthosetFamily::other;
  return {f, r};
}

inline std::vector<std::size_t> members(PointSet a) {
  std::vector<std::size_t> out;
  while (a) {
    out.push_back(std::countr_zero(a));
    a &= a - 1;
  }
  return out;
}

inline PointSet point_set(const std::vector<std::size_t>& xs) {
  PointSet a = 0;
  for (auto x : xs) {
    if (x >= kMaxFiniteOrthoset) throw DomainError("point " + std::to_string(x) + " out of range");
    a |= FiniteOrthoset::bit(x);
  }
  return a;
}

/// JSON form: an array of adjacency lists, or {"adjacency": [...]}.
inline Json orthoset_to_json(const FiniteOrthoset& x) { return Json{{"adjacency", x.adjacency_lists()}}; }

inline FiniteOrthoset orthoset_from_json(const Json& j) {
  if (j.is_object() && !j.contains("adjacency")) throw ParseError("orthoset object needs 'adjacency'", 0);
  const Json& lists = j.is_object() ? j.at("adjacency") : j;
  if (!lists.is_array()) throw ParseError("orthoset: expected an array of adjacency lists", 0);
  try {
    return FiniteOrthoset(lists.get<std::vector<std::vector<std::size_t>>>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("orthoset: ") + e.what(), 0);
  }
}

}  // namespace hos
