#pragma once

// The orthoset (P(F^n), perp): one-dimensional subspaces with <u> perp <v> iff
// <u, v> = 0, together with orthoclosures, lines and linearity witnesses.

#include <span>
#include <string>
#include <vector>

#include "hos/spaces/subspace.hpp"

namespace hos {

/// A point <x> of P(F^n), represented by x scaled so that its first nonzero
/// coordinate is 1. Structural equality of representatives is point equality.
template <StarField S>
class ProjectivePoint {
 public:
  using traits = scalar_traits<S>;

  explicit ProjectivePoint(const Vector<S>& v) : rep_(canonicalize(v)) {}

  const Vector<S>& rep() const { return rep_; }
  std::size_t dimension() const { return rep_.size(); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.rep_ == b.rep_; }

  std::string to_string() const { return "<" + rep_.to_string() + ">"; }

 private:
  static Vector<S> canonicalize(const Vector<S>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (traits::is_zero(v[i])) continue;
      Vector<S> r = traits::inverse(v[i]) * v;
      r[i] = traits::one();
      return r;
    }
    throw DomainError("the zero vector spans no point");
  }

  Vector<S> rep_;
};

template <StarField S>
bool perp(const ProjectivePoint<S>& e, const ProjectivePoint<S>& f) {
  return orthogonal(e.rep(), f.rep());
}

/// {e1, ..., ek}^perp-perp, which in P(F^n) is P(span of the representatives).
template <StarField S>
Subspace<S> orthoclosure(std::span<const ProjectivePoint<S>> pts) {
  if (pts.empty()) throw DomainError("orthoclosure of an empty family needs an ambient dimension");
  std::vector<Vector<S>> reps;
  for (const auto& p : pts) reps.push_back(p.rep());
  return Subspace<S>::span(reps, pts.front().dimension());
}

template <StarField S>
Subspace<S> orthoclosure(const std::vector<ProjectivePoint<S>>& pts) {
  return orthoclosure(std::span<const ProjectivePoint<S>>(pts));
}

template <StarField S>
bool contains(const Subspace<S>& m, const ProjectivePoint<S>& p) {
  return m.contains(p.rep());
}

/// The points of P(F^n) orthogonal to every point of `pts`, as a subspace.
template <StarField S>
Subspace<S> perp_set(std::span<const ProjectivePoint<S>> pts, std::size_t n) {
  std::vector<Vector<S>> reps;
  for (const auto& p : pts) reps.push_back(p.rep());
  return orthocomplement(Subspace<S>::span(reps, n));
}

/// A line e * f = {e, f}^perp-perp of P(F^n).
template <StarField S>
struct LineHandle {
  Subspace<S> subspace;
  ProjectivePoint<S> e;
  ProjectivePoint<S> f;

  bool contains(const ProjectivePoint<S>& p) const { return subspace.contains(p.rep()); }
};

template <StarField S>
LineHandle<S> line(const ProjectivePoint<S>& e, const ProjectivePoint<S>& f) {
  if (e == f) throw DomainError("a line needs two distinct points");
  ProjectivePoint<S> pair[] = {e, f};
  return {orthoclosure<S>(pair), e, f};
}

/// Line handle for a two-dimensional subspace, generated by its echelon basis.
template <StarField S>
LineHandle<S> line_of(const Subspace<S>& m) {
  if (m.dimension() != 2) throw DomainError("a line is a two-dimensional subspace");
  return {m, ProjectivePoint<S>(m.basis()[0]), ProjectivePoint<S>(m.basis()[1])};
}

/// L1: a point g perp e with {e, f}^perp = {e, g}^perp, obtained by removing
/// from f its component along e. Both properties are checked before returning.
template <StarField S>
ProjectivePoint<S> witness_L1(const ProjectivePoint<S>& e, const ProjectivePoint<S>& f) {
  using T = scalar_traits<S>;
  if (e == f) throw DomainError("L1 needs two distinct points");
  const Vector<S>& u = e.rep();
  const Vector<S>& v = f.rep();
  S coef = inner(v, u) * T::inverse(length(u));
  ProjectivePoint<S> g(v - coef * u);
  ProjectivePoint<S> eg[] = {e, g};
  ProjectivePoint<S> ef[] = {e, f};
  if (!perp(g, e) || !(orthoclosure<S>(eg) == orthoclosure<S>(ef)))
    throw Error("L1 witness failed verification");
  return g;
}

/// L2: a third point on e * f, namely <e + f>, or <e + 2f> should that coincide
/// with e or f.
template <StarField S>
ProjectivePoint<S> witness_L2(const ProjectivePoint<S>& e, const ProjectivePoint<S>& f) {
  using T = scalar_traits<S>;
  if (e == f) throw DomainError("L2 needs two distinct points");
  Vector<S> w = e.rep() + f.rep();
  if (w.is_zero() || ProjectivePoint<S>(w) == e || ProjectivePoint<S>(w) == f)
    w = e.rep() + T::from_rational(2) * f.rep();
  ProjectivePoint<S> g(w);
  ProjectivePoint<S> ef[] = {e, f};
  if (g == e || g == f || !contains(orthoclosure<S>(ef), g)) throw Error("L2 witness failed verification");
  return g;
}

}  // namespace hos
