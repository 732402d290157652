#pragma once

// Seeded sample generators for property checks. Values come from mt19937_64
// reduced by modulo, so a seed gives the same samples on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "hos/orthosets/projective.hpp"

namespace hos {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  /// Uniform-ish in [0, n).
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  /// In [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 gen_;
};

inline Rational random_rational(Rng& rng, long max_num = 9, long max_den = 4) {
  Rational q(rng.range(-max_num, max_num), rng.range(1, max_den));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng& rng, long max_num = 9, long max_den = 4) {
  for (;;) {
    Rational q = random_rational(rng, max_num, max_den);
    if (q != 0) return q;
  }
}

/// Element of `tower` with small random coefficients, about a third of them zero.
inline FieldElement random_element(Rng& rng, const Tower& tower) {
  std::vector<Rational> c(std::size_t{1} << tower.depth());
  for (auto& q : c) q = rng.chance(35) ? Rational(0) : random_rational(rng);
  return FieldElement(tower, std::move(c));
}

inline FieldElement random_nonzero_element(Rng& rng, const Tower& tower) {
  for (;;) {
    FieldElement x = random_element(rng, tower);
    if (!x.is_zero()) return x;
  }
}

inline Quaternion random_quaternion(Rng& rng) {
  auto part = [&] { return rng.chance(25) ? Rational(0) : random_rational(rng); };
  Rational a = part(), b = part(), c = part(), d = part();
  return Quaternion(a, b, c, d);
}

inline Quaternion random_nonzero_quaternion(Rng& rng) {
  for (;;) {
    Quaternion q = random_quaternion(rng);
    if (!q.is_zero()) return q;
  }
}

/// Random scalars of either kind; towers draw from a fixed tower.
template <StarField S>
struct ScalarSampler;

template <>
struct ScalarSampler<FieldElement> {
  Tower tower;
  FieldElement operator()(Rng& rng) const { return random_element(rng, tower); }
};

template <>
struct ScalarSampler<Quaternion> {
  Quaternion operator()(Rng& rng) const { return random_quaternion(rng); }
};

template <StarField S>
Vector<S> random_vector(Rng& rng, const ScalarSampler<S>& sample, std::size_t n) {
  std::vector<S> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(rng.chance(20) ? scalar_traits<S>::zero() : sample(rng));
  return Vector<S>(std::move(c));
}

template <StarField S>
Vector<S> random_nonzero_vector(Rng& rng, const ScalarSampler<S>& sample, std::size_t n) {
  for (;;) {
    Vector<S> v = random_vector(rng, sample, n);
    if (!v.is_zero()) return v;
  }
}

template <StarField S>
ProjectivePoint<S> random_point(Rng& rng, const ScalarSampler<S>& sample, std::size_t n) {
  return ProjectivePoint<S>(random_nonzero_vector(rng, sample, n));
}

/// Two distinct random points.
template <StarField S>
std::pair<ProjectivePoint<S>, ProjectivePoint<S>> random_point_pair(Rng& rng, const ScalarSampler<S>& sample,
                                                                    std::size_t n) {
  ProjectivePoint<S> e = random_point(rng, sample, n);
  for (;;) {
    ProjectivePoint<S> f = random_point(rng, sample, n);
    if (!(f == e)) return {e, f};
  }
}

/// Random subspace of dimension exactly k.
template <StarField S>
Subspace<S> random_subspace(Rng& rng, const ScalarSampler<S>& sample, std::size_t n, std::size_t k) {
  for (;;) {
    std::vector<Vector<S>> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, sample, n));
    Subspace<S> m = Subspace<S>::span(vs, n);
    if (m.dimension() == k) return m;
  }
}

/// A Hilbert-field fragment of the given depth: each step adjoins hypot of two
/// random elements of the tower built so far.
inline Tower random_hilbert_tower(Rng& rng, std::size_t depth, std::size_t depth_limit = kDefaultDepthLimit) {
  Tower t = Tower::rationals(depth_limit);
  while (t.depth() < depth) {
    FieldElement a = random_nonzero_element(rng, t), b = random_nonzero_element(rng, t);
    HypotResult h = hypot(a.lift(t), b.lift(t));
    if (h.tower.depth() > t.depth()) t = h.tower;
  }
  return t;
}

/// Q(r1 = hypot(1, 1), r2 = hypot(1, 1 + r1)) = Q(sqrt 2, sqrt(4 + 2 sqrt 2)): the
/// scalar field used for the R<n> spaces.
inline Tower standard_fragment(std::size_t depth_limit = kDefaultDepthLimit) {
  Tower q = Tower::rationals(depth_limit);
  HypotResult h1 = hypot(FieldElement::rational(1, q), FieldElement::rational(1, q));
  FieldElement one = FieldElement::rational(1, h1.tower);
  HypotResult h2 = hypot(one, one + h1.value);
  return h2.tower;
}

/// A point of the unit circle: ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) for random t.
inline std::pair<Rational, Rational> random_circle_point(Rng& rng) {
  Rational t = random_nonzero_rational(rng, 7, 5);
  Rational den = 1 + t * t;
  Rational a = (1 - t * t) / den, b = 2 * t / den;
  return {a, b};
}

}  // namespace hos
