#pragma once

// Real quadratic extension towers over the rationals.
//
// A tower of depth k is Q = K_0 < K_1 < ... < K_k with K_i = K_{i-1}(r_i), where
// r_i is the positive square root of a positive non-square d_i in K_{i-1}. An
// element of K_k is stored as 2^k rational coefficients over the monomials
// r_1^{b_1} ... r_k^{b_k}; bit i-1 of the coefficient index is the exponent of r_i.
//
// Towers are persistent: adjoining a generator creates a child node sharing its
// parent, so every prefix of a tower is again a tower. Binary arithmetic accepts
// operands whose towers are prefixes of one another and lifts the shorter one by
// zero-padding; anything else is a TowerMismatch.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hos/error.hpp"
#include "hos/rational.hpp"

namespace hos {

inline constexpr std::size_t kDefaultDepthLimit = 12;

struct TowerNode;
struct Provenance;
class FieldElement;
class Tower;

namespace detail {
struct DiscView;
std::vector<DiscView> discriminants(const Tower& t);
}  // namespace detail

class Tower {
 public:
  /// The rationals, i.e. the depth-0 tower.
  static Tower rationals(std::size_t depth_limit = kDefaultDepthLimit);

  std::size_t depth() const;
  std::size_t depth_limit() const;

  /// Same tower with a different depth limit.
  Tower with_depth_limit(std::size_t limit) const;

  /// The initial segment K_k of this tower.
  Tower prefix(std::size_t k) const;

  /// d_{i+1}: the discriminant adjoined at stage i, an element of prefix(i).
  const FieldElement& discriminant(std::size_t i) const;

  /// Terms whose squares sum to scale^2 * d_{i+1}, when the generator came from hypot.
  const Provenance* provenance(std::size_t i) const;

  /// True iff this tower is an initial segment of `other`.
  bool is_prefix_of(const Tower& other) const;

  /// Human-readable identifier, e.g. "Q(r1=sqrt(2),r2=sqrt(4 + 2*r1))".
  std::string id() const;

  friend bool operator==(const Tower& a, const Tower& b);

 private:
  friend Tower adjoin_unchecked(const Tower&, FieldElement, std::optional<Provenance>);
  friend std::vector<detail::DiscView> detail::discriminants(const Tower& t);
  explicit Tower(std::shared_ptr<const TowerNode> node) : node_(std::move(node)) {}
  const TowerNode& node() const { return *node_; }

  std::shared_ptr<const TowerNode> node_;
};

class FieldElement {
 public:
  /// Zero of the rationals.
  FieldElement();
  FieldElement(const Rational& q);  // NOLINT: rationals embed implicitly
  FieldElement(long n) : FieldElement(Rational(n)) {}  // NOLINT
  FieldElement(int n) : FieldElement(Rational(n)) {}   // NOLINT
  explicit FieldElement(Tower tower);
  FieldElement(Tower tower, std::vector<Rational> coeffs);

  static FieldElement rational(const Rational& q, const Tower& tower);
  /// r_{i+1} as an element of `tower`.
  static FieldElement generator(const Tower& tower, std::size_t i);

  const Tower& tower() const { return tower_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& constant() const { return coeffs_[0]; }

  /// Re-express in an extension of the current tower.
  FieldElement lift(const Tower& target) const;

  /// Split x = a + b*r_k into (a, b) over prefix(depth - 1). Requires depth >= 1.
  std::pair<FieldElement, FieldElement> split() const;
  /// Inverse of split: a + b*r_k where k = depth(tower) and a, b live in prefix(k-1).
  static FieldElement join(const FieldElement& a, const FieldElement& b, const Tower& tower);

  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Text over generator names, e.g. "-1 + r1" or "1/2*r1*r2".
  std::string to_string() const;

 private:
  Tower tower_;
  std::vector<Rational> coeffs_;
};

/// Record of how a generator was produced: sum(terms^2) = scale^2 * discriminant.
struct Provenance {
  std::vector<FieldElement> terms;
  Rational scale = 1;
};

struct TowerNode {
  std::shared_ptr<const TowerNode> parent;
  std::size_t depth = 0;
  std::size_t depth_limit = kDefaultDepthLimit;
  std::optional<FieldElement> discriminant;
  std::optional<Provenance> provenance;
  // discriminant = disc_num / disc_den with integer disc_num, for the multiplication kernel
  std::vector<Integer> disc_num;
  Integer disc_den = 1;
};

/// Appends a generator without the positivity/non-square checks. Use `adjoin`.
Tower adjoin_unchecked(const Tower& base, FieldElement d, std::optional<Provenance> provenance);

// ---------------------------------------------------------------------------
// Coefficient-level kernels. A "level-k value" is a span of 2^k rationals.

namespace detail {

struct DiscView {
  const std::vector<Rational>* coeffs;
  const std::vector<Integer>* num;
  const Integer* den;
};

/// Discriminants d_1..d_k of a tower, bottom-up.
inline std::vector<DiscView> discriminants(const Tower& t) {
  std::vector<DiscView> out(t.depth());
  const TowerNode* n = &t.node();
  for (; n->depth > 0; n = n->parent.get())
    out[n->depth - 1] = {&n->discriminant->coeffs(), &n->disc_num, &n->disc_den};
  return out;
}

using Coeffs = std::vector<Rational>;
using Discs = std::span<const DiscView>;

inline bool all_zero(std::span<const Rational> v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

inline bool all_zero(std::span<const Integer> v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

inline Coeffs add(std::span<const Rational> a, std::span<const Rational> b) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Coeffs sub(std::span<const Rational> a, std::span<const Rational> b) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// a = num / den with den the lcm of the denominators.
inline void clear_denominators(std::span<const Rational> a, std::vector<Integer>& num, Integer& den) {
  den = 1;
  for (const auto& c : a)
    if (c.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  num.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) num[i] = a[i].get_num() * (den / a[i].get_den());
}

// Integer kernel. For integer vectors x, y at level k it returns z with
// x * y = z / s_k, where s_0 = 1 and s_k = s_{k-1}^2 * den(d_k); the scale only
// depends on the level, so no gcds are taken inside the recursion.
//
// (a0 + a1 r)(b0 + b1 r) = (a0 b0 + d a1 b1) + (a0 b1 + a1 b0) r with three
// products at the level below (Karatsuba).
inline std::vector<Integer> mulz(std::span<const Integer> a, std::span<const Integer> b, std::size_t level,
                                 Discs discs, std::span<const Integer> scale) {
  if (level == 0) return {a[0] * b[0]};
  std::size_t h = a.size() / 2;
  auto a0 = a.first(h), a1 = a.subspan(h), b0 = b.first(h), b1 = b.subspan(h);
  // f = s_k / s_{k-1}: brings level k-1 products to scale s_k.
  Integer f = scale[level - 1] * *discs[level - 1].den;
  bool unit = f == 1;
  std::vector<Integer> r(a.size());
  bool a1z = all_zero(a1), b1z = all_zero(b1);
  if (a1z || b1z) {
    auto lo = a1z ? a0 : b0;
    auto hi0 = a1z && b1z ? b0 : (a1z ? b0 : a0);
    auto hi1 = a1z ? b1 : a1;
    std::vector<Integer> p0 = mulz(lo, hi0, level - 1, discs, scale);
    for (std::size_t i = 0; i < h; ++i) r[i] = unit ? p0[i] : Integer(p0[i] * f);
    if (!(a1z && b1z)) {
      std::vector<Integer> p1 = mulz(lo, hi1, level - 1, discs, scale);
      for (std::size_t i = 0; i < h; ++i) r[h + i] = unit ? p1[i] : Integer(p1[i] * f);
    }
    return r;
  }
  std::vector<Integer> p00 = mulz(a0, b0, level - 1, discs, scale);
  std::vector<Integer> p11 = mulz(a1, b1, level - 1, discs, scale);
  std::vector<Integer> sa(h), sb(h);
  for (std::size_t i = 0; i < h; ++i) {
    sa[i] = a0[i] + a1[i];
    sb[i] = b0[i] + b1[i];
  }
  std::vector<Integer> pm = mulz(sa, sb, level - 1, discs, scale);
  std::vector<Integer> dp = mulz(*discs[level - 1].num, p11, level - 1, discs, scale);
  for (std::size_t i = 0; i < h; ++i) {
    Integer mid = pm[i] - p00[i] - p11[i];
    if (unit) {
      r[i] = p00[i] + dp[i];
      r[h + i] = std::move(mid);
    } else {
      r[i] = p00[i] * f + dp[i];
      r[h + i] = mid * f;
    }
  }
  return r;
}

inline Coeffs mul(std::span<const Rational> a, std::span<const Rational> b, std::size_t level, Discs discs) {
  if (level == 0) return Coeffs{a[0] * b[0]};
  std::vector<Integer> an, bn;
  Integer ad, bd;
  clear_denominators(a, an, ad);
  clear_denominators(b, bn, bd);
  std::vector<Integer> scale(level + 1);
  scale[0] = 1;
  for (std::size_t k = 1; k <= level; ++k) scale[k] = scale[k - 1] * scale[k - 1] * *discs[k - 1].den;
  std::vector<Integer> z = mulz(an, bn, level, discs, scale);
  Integer den = ad * bd * scale[level];
  Coeffs r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(z[i]) == 0) continue;
    r[i] = Rational(z[i], den);
    r[i].canonicalize();
  }
  return r;
}

// (a0 + a1 r)^-1 = (a0 - a1 r) / (a0^2 - d a1^2); the norm is nonzero because d is
// not a square in the level below.
inline Coeffs inv(std::span<const Rational> a, std::size_t level, Discs discs) {
  if (level == 0) {
    if (a[0] == 0) throw DivisionByZero();
    return Coeffs{1 / a[0]};
  }
  std::size_t h = a.size() / 2;
  auto a0 = a.first(h), a1 = a.subspan(h);
  Coeffs r(a.size());
  if (all_zero(a1)) {
    Coeffs i0 = inv(a0, level - 1, discs);
    std::copy(i0.begin(), i0.end(), r.begin());
    return r;
  }
  Coeffs n0 = mul(a0, a0, level - 1, discs);
  Coeffs n1 = mul(a1, a1, level - 1, discs);
  Coeffs dn1 = mul(*discs[level - 1].coeffs, n1, level - 1, discs);
  Coeffs norm = sub(n0, dn1);
  Coeffs ninv = inv(norm, level - 1, discs);
  Coeffs r0 = mul(a0, ninv, level - 1, discs);
  Coeffs r1 = mul(a1, ninv, level - 1, discs);
  for (std::size_t i = 0; i < h; ++i) {
    r[i] = r0[i];
    r[h + i] = -r1[i];
  }
  return r;
}

/// The longer of two prefix-related towers; TowerMismatch otherwise.
inline const Tower& common_tower(const Tower& a, const Tower& b) {
  if (a.depth() <= b.depth()) {
    if (a.is_prefix_of(b)) return b;
  } else if (b.is_prefix_of(a)) {
    return a;
  }
  throw TowerMismatch();
}

inline std::string monomial_name(std::size_t index) {
  std::string s;
  for (std::size_t bit = 0; (index >> bit) != 0; ++bit) {
    if (((index >> bit) & 1U) == 0) continue;
    if (!s.empty()) s += '*';
    s += "r" + std::to_string(bit + 1);
  }
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Tower

inline Tower Tower::rationals(std::size_t depth_limit) {
  auto n = std::make_shared<TowerNode>();
  n->depth_limit = depth_limit;
  return Tower(std::move(n));
}

inline std::size_t Tower::depth() const { return node_->depth; }
inline std::size_t Tower::depth_limit() const { return node_->depth_limit; }

inline Tower Tower::with_depth_limit(std::size_t limit) const {
  if (limit < depth()) throw DepthLimitExceeded(limit);
  auto n = std::make_shared<TowerNode>(*node_);
  n->depth_limit = limit;
  return Tower(std::move(n));
}

inline Tower Tower::prefix(std::size_t k) const {
  if (k > depth()) throw DomainError("prefix longer than tower");
  std::shared_ptr<const TowerNode> n = node_;
  while (n->depth > k) n = n->parent;
  return Tower(n);
}

inline const FieldElement& Tower::discriminant(std::size_t i) const {
  if (i >= depth()) throw DomainError("no such generator");
  const TowerNode* n = node_.get();
  while (n->depth > i + 1) n = n->parent.get();
  return *n->discriminant;
}

inline const Provenance* Tower::provenance(std::size_t i) const {
  if (i >= depth()) throw DomainError("no such generator");
  const TowerNode* n = node_.get();
  while (n->depth > i + 1) n = n->parent.get();
  return n->provenance ? &*n->provenance : nullptr;
}

inline bool operator==(const Tower& a, const Tower& b) {
  const TowerNode* x = a.node_.get();
  const TowerNode* y = b.node_.get();
  if (x->depth != y->depth) return false;
  while (x != y && x->depth > 0) {
    // Discriminants live one level down, where the towers are already known to
    // agree once the walk finishes; comparing coefficient vectors is enough.
    if (x->discriminant->coeffs() != y->discriminant->coeffs()) return false;
    x = x->parent.get();
    y = y->parent.get();
  }
  return true;
}

inline bool Tower::is_prefix_of(const Tower& other) const {
  if (depth() > other.depth()) return false;
  return other.prefix(depth()) == *this;
}

inline std::string Tower::id() const {
  if (depth() == 0) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < depth(); ++i) {
    if (i) s += ',';
    s += "r" + std::to_string(i + 1) + "=sqrt(" + discriminant(i).to_string() + ")";
  }
  return s + ")";
}

inline Tower adjoin_unchecked(const Tower& base, FieldElement d,
                              std::optional<Provenance> provenance) {
  if (base.depth() >= base.depth_limit()) throw DepthLimitExceeded(base.depth_limit());
  auto n = std::make_shared<TowerNode>();
  n->parent = base.node_;
  n->depth = base.depth() + 1;
  n->depth_limit = base.depth_limit();
  n->discriminant = d.lift(base);
  n->provenance = std::move(provenance);
  detail::clear_denominators(n->discriminant->coeffs(), n->disc_num, n->disc_den);
  return Tower(std::move(n));
}

// ---------------------------------------------------------------------------
// FieldElement

inline FieldElement::FieldElement() : FieldElement(Rational(0)) {}

inline FieldElement::FieldElement(const Rational& q)
    : tower_(Tower::rationals()), coeffs_{q} {}

inline FieldElement::FieldElement(Tower tower)
    : tower_(std::move(tower)), coeffs_(std::size_t{1} << tower_.depth()) {}

inline FieldElement::FieldElement(Tower tower, std::vector<Rational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (std::size_t{1} << tower_.depth()))
    throw DomainError("coefficient count does not match tower depth");
}

inline FieldElement FieldElement::rational(const Rational& q, const Tower& tower) {
  FieldElement x(tower);
  x.coeffs_[0] = q;
  return x;
}

inline FieldElement FieldElement::generator(const Tower& tower, std::size_t i) {
  if (i >= tower.depth()) throw DomainError("no such generator");
  FieldElement x(tower);
  x.coeffs_[std::size_t{1} << i] = 1;
  return x;
}

inline bool FieldElement::is_zero() const { return detail::all_zero(coeffs_); }

inline bool FieldElement::is_rational() const {
  return detail::all_zero(std::span<const Rational>(coeffs_).subspan(1));
}

inline FieldElement FieldElement::lift(const Tower& target) const {
  if (!tower_.is_prefix_of(target)) throw TowerMismatch();
  if (target.depth() == tower_.depth()) return FieldElement(target, coeffs_);
  std::vector<Rational> c(std::size_t{1} << target.depth());
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin());
  return FieldElement(target, std::move(c));
}

inline std::pair<FieldElement, FieldElement> FieldElement::split() const {
  if (tower_.depth() == 0) throw DomainError("cannot split a rational");
  Tower lower = tower_.prefix(tower_.depth() - 1);
  std::size_t h = coeffs_.size() / 2;
  return {FieldElement(lower, {coeffs_.begin(), coeffs_.begin() + h}),
          FieldElement(lower, {coeffs_.begin() + h, coeffs_.end()})};
}

inline FieldElement FieldElement::join(const FieldElement& a, const FieldElement& b,
                                       const Tower& tower) {
  if (tower.depth() == 0) throw DomainError("cannot join into the rationals");
  Tower lower = tower.prefix(tower.depth() - 1);
  FieldElement la = a.lift(lower), lb = b.lift(lower);
  std::vector<Rational> c(la.coeffs_);
  c.insert(c.end(), lb.coeffs_.begin(), lb.coeffs_.end());
  return FieldElement(tower, std::move(c));
}

inline FieldElement FieldElement::inverse() const {
  auto discs = detail::discriminants(tower_);
  return FieldElement(tower_, detail::inv(coeffs_, tower_.depth(), discs));
}

inline FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

inline FieldElement& FieldElement::operator+=(const FieldElement& o) {
  const Tower& t = detail::common_tower(tower_, o.tower_);
  if (t.depth() != tower_.depth()) *this = lift(t);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

inline FieldElement& FieldElement::operator-=(const FieldElement& o) {
  const Tower& t = detail::common_tower(tower_, o.tower_);
  if (t.depth() != tower_.depth()) *this = lift(t);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  // Multiplying by an element of a lower stage never touches the upper generators.
  if (a.tower_.depth() < b.tower_.depth()) return b * a;
  detail::common_tower(a.tower_, b.tower_);
  if (b.is_rational()) {
    FieldElement r(a);
    const Rational& q = b.coeffs_[0];
    for (auto& c : r.coeffs_) c *= q;
    return r;
  }
  auto discs = detail::discriminants(a.tower_);
  std::size_t k = a.tower_.depth();
  std::size_t kb = b.tower_.depth();
  if (kb == k) return FieldElement(a.tower_, detail::mul(a.coeffs_, b.coeffs_, k, discs));
  // b lives in K_kb: multiply each K_kb-block of a separately.
  std::size_t block = b.coeffs_.size();
  std::vector<Rational> out(a.coeffs_.size());
  std::span<const Rational> ac(a.coeffs_);
  for (std::size_t off = 0; off < out.size(); off += block) {
    auto p = detail::mul(ac.subspan(off, block), b.coeffs_, kb, discs);
    std::copy(p.begin(), p.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
  }
  return FieldElement(a.tower_, std::move(out));
}

/// sum a_i b_i with one canonicalization per coefficient: every product goes
/// through the integer kernel and the numerators are summed over a shared
/// denominator.
inline FieldElement dot(std::span<const FieldElement> a, std::span<const FieldElement> b) {
  if (a.size() != b.size()) throw DomainError("dot: length mismatch");
  const Tower* t = nullptr;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    const Tower& ab = detail::common_tower(a[i].tower(), b[i].tower());
    t = t ? &detail::common_tower(*t, ab) : &ab;
  }
  if (!t) return FieldElement();
  std::size_t k = t->depth();
  if (k == 0) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].constant() * b[i].constant();
    return FieldElement(s);
  }
  auto discs = detail::discriminants(*t);
  std::vector<Integer> scale(k + 1);
  scale[0] = 1;
  for (std::size_t j = 1; j <= k; ++j) scale[j] = scale[j - 1] * scale[j - 1] * *discs[j - 1].den;
  std::size_t len = std::size_t{1} << k;
  std::vector<Integer> sum(len);
  Integer den = 1;  // sum / (den * scale[k]) is the running total
  std::vector<Integer> an, bn;
  Integer ad, bd;
  std::vector<Integer> z(len);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    // x is the factor of larger depth; y lives in the stage K_m below it
    bool swap = a[i].tower().depth() < b[i].tower().depth();
    const FieldElement& x = swap ? b[i] : a[i];
    const FieldElement& y = swap ? a[i] : b[i];
    std::size_t m = y.is_rational() ? 0 : y.tower().depth();
    detail::clear_denominators(x.coeffs(), an, ad);
    detail::clear_denominators(std::span<const Rational>(y.coeffs()).first(std::size_t{1} << m), bn, bd);
    an.resize(len);
    // products at level m carry scale s_m; s_m divides s_k
    Integer lift = scale[k] / scale[m];
    std::size_t block = std::size_t{1} << m;
    std::span<const Integer> as(an);
    for (std::size_t off = 0; off < len; off += block) {
      auto ab = as.subspan(off, block);
      if (detail::all_zero(ab)) {
        std::fill(z.begin() + static_cast<std::ptrdiff_t>(off), z.begin() + static_cast<std::ptrdiff_t>(off + block),
                  Integer(0));
        continue;
      }
      if (m == 0) {
        z[off] = ab[0] * bn[0] * lift;
        continue;
      }
      std::vector<Integer> p = detail::mulz(ab, bn, m, discs, scale);
      for (std::size_t j = 0; j < block; ++j) z[off + j] = lift == 1 ? p[j] : Integer(p[j] * lift);
    }
    Integer d = ad * bd;
    if (d == den) {
      for (std::size_t j = 0; j < len; ++j) sum[j] += z[j];
      continue;
    }
    Integer l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    Integer fs = l / den, fz = l / d;
    for (std::size_t j = 0; j < len; ++j) sum[j] = sum[j] * fs + z[j] * fz;
    den = std::move(l);
  }
  den *= scale[k];
  std::vector<Rational> out(len);
  for (std::size_t j = 0; j < len; ++j) {
    if (sgn(sum[j]) == 0) continue;
    out[j] = Rational(sum[j], den);
    out[j].canonicalize();
  }
  return FieldElement(*t, std::move(out));
}

inline FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }
inline FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this = *this / o; }

inline bool operator==(const FieldElement& a, const FieldElement& b) {
  const Tower& t = detail::common_tower(a.tower_, b.tower_);
  (void)t;
  const auto& small = a.coeffs_.size() <= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& big = a.coeffs_.size() <= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (i < small.size()) {
      if (small[i] != big[i]) return false;
    } else if (big[i] != 0) {
      return false;
    }
  }
  return true;
}

inline std::string FieldElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    std::string term;
    if (i == 0) {
      term = hos::to_string(mag);
    } else if (mag == 1) {
      term = detail::monomial_name(i);
    } else {
      term = hos::to_string(mag) + "*" + detail::monomial_name(i);
    }
    if (s.empty()) {
      s = neg ? "-" + term : term;
    } else {
      s += neg ? " - " : " + ";
      s += term;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace hos
