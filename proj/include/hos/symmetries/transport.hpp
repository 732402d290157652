#pragma once

// Orthogonal maps moving subspaces, rotating lines and transporting flags. Every
// construction checks its defining properties before returning and throws Error
// if a check fails.

#include <string>
#include <utility>
#include <vector>

#include "hos/report.hpp"
#include "hos/symmetries/orthogonal_map.hpp"

namespace hos {

/// U with U(M1) = M2 that fixes M1 intersect M2 and (M1 + M2)-perp pointwise.
///
/// An orthonormal basis C of the intersection is extended to orthonormal bases
/// B1 of M1 and B2 of M2, then each of those to an orthonormal basis of M1 + M2.
/// U sends the first extension to the second and is the identity elsewhere.
template <StarField S>
OrthogonalMap<S> transporter(const Subspace<S>& m1, const Subspace<S>& m2,
                             typename scalar_traits<S>::context& ctx) {
  using T = scalar_traits<S>;
  std::size_t n = m1.ambient_dimension();
  if (m2.ambient_dimension() != n || m1.dimension() != m2.dimension())
    throw DomainError("transporter needs subspaces of equal dimension in one space");
  for (const auto* m : {&m1, &m2})
    for (const auto& b : m->basis())
      for (const auto& c : b) T::absorb(ctx, c);

  Subspace<S> meet = intersection(m1, m2);
  Subspace<S> join = sum(m1, m2);
  std::vector<Vector<S>> c = orthonormal_basis(meet, ctx);
  std::vector<Vector<S>> f1 = c, f2 = c;
  extend_orthonormal<S>(f1, m1.basis(), ctx);
  extend_orthonormal<S>(f2, m2.basis(), ctx);
  extend_orthonormal<S>(f1, join.basis(), ctx);
  extend_orthonormal<S>(f2, join.basis(), ctx);
  std::vector<Vector<S>> s, t;
  for (std::size_t i = c.size(); i < f1.size(); ++i) {
    s.push_back(in_context(f1[i], ctx));
    t.push_back(in_context(f2[i], ctx));
  }
  OrthogonalMap<S> u = frame_change<S>(n, s, t);

  if (!verify_orthogonal(u)) throw Error("transporter: result is not orthogonal");
  if (!(apply_subspace(u, m1) == m2)) throw Error("transporter: U(M1) != M2");
  if (!fixes_pointwise(u, meet)) throw Error("transporter: intersection not fixed");
  if (!fixes_pointwise(u, orthocomplement(join))) throw Error("transporter: complement not fixed");
  return u;
}

template <StarField S>
OrthogonalMap<S> transporter(const Subspace<S>& m1, const Subspace<S>& m2) {
  auto ctx = scalar_traits<S>::make_context();
  return transporter(m1, m2, ctx);
}

template <StarField S>
struct Rotation {
  OrthogonalMap<S> map;
  S alpha;
  S beta;
};

namespace detail {

template <StarField S>
void require_commutative(const char* what) {
  if constexpr (!scalar_traits<S>::commutative)
    throw DomainError(std::string(what) + " needs a commutative scalar field");
}

template <StarField S>
using Matrix = std::vector<std::vector<S>>;

template <StarField S>
Matrix<S> zero_matrix(std::size_t n) {
  return Matrix<S>(n, std::vector<S>(n, scalar_traits<S>::zero()));
}

// c u v^T: the map x -> c <x, v> u for the identity involution.
template <StarField S>
Matrix<S> outer(const Vector<S>& u, const Vector<S>& v, const S& c) {
  Matrix<S> m = zero_matrix<S>(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (scalar_traits<S>::is_zero(u[i])) continue;
    S cu = c * u[i];
    for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = cu * v[j];
  }
  return m;
}

// sum_k c_k A_k, optionally plus the identity.
template <StarField S>
Matrix<S> combine(std::size_t n, bool plus_identity, std::initializer_list<std::pair<S, const Matrix<S>*>> terms) {
  Matrix<S> m = zero_matrix<S>(n);
  if (plus_identity)
    for (std::size_t i = 0; i < n; ++i) m[i][i] = scalar_traits<S>::one();
  for (const auto& [c, a] : terms) {
    if (scalar_traits<S>::is_zero(c)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!scalar_traits<S>::is_zero((*a)[i][j])) m[i][j] = m[i][j] + c * (*a)[i][j];
  }
  return m;
}

template <StarField S>
Matrix<S> product(const Matrix<S>& a, const Matrix<S>& b) {
  std::size_t n = a.size();
  Matrix<S> m = zero_matrix<S>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (scalar_traits<S>::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!scalar_traits<S>::is_zero(b[k][j])) m[i][j] = m[i][j] + a[i][k] * b[k][j];
    }
  return m;
}

template <StarField S>
Vector<S> times(const Matrix<S>& a, const Vector<S>& x) {
  Vector<S> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    S acc = scalar_traits<S>::zero();
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!scalar_traits<S>::is_zero(x[j])) acc = acc + a[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

template <StarField S>
Matrix<S> in_context(Matrix<S> m, const typename scalar_traits<S>::context& ctx) {
  for (auto& row : m)
    for (auto& x : row) x = scalar_traits<S>::in_context(x, ctx);
  return m;
}

}  // namespace detail

/// What rotating a line l = P(M) needs, over a commutative field: the orthogonal
/// projection `proj` onto M, the quarter turn `turn` of M (zero on M-perp), and the
/// projection `axis` onto the first generating point of l.
///
/// With u1 = rep(e) and u2 its orthogonal companion in M, turn = (u2 u1^T - u1 u2^T) / g
/// where g = |u1| |u2| is the hypot of the Pluecker coordinates u1_i u2_j - u1_j u2_i.
/// That is the only square root involved, so rotations with parameters in a field K
/// have entries in K(g).
template <StarField S>
struct LineFrame {
  detail::Matrix<S> proj;
  detail::Matrix<S> turn;
  detail::Matrix<S> axis;
};

template <StarField S>
LineFrame<S> line_frame(const LineHandle<S>& l, typename scalar_traits<S>::context& ctx) {
  using T = scalar_traits<S>;
  detail::require_commutative<S>("line_frame");
  for (const auto* p : {&l.e, &l.f})
    for (const auto& c : p->rep()) T::absorb(ctx, c);
  const Vector<S>& u1 = l.e.rep();
  S n1 = length(u1);
  Vector<S> u2 = l.f.rep() - (inner(l.f.rep(), u1) * T::inverse(n1)) * u1;
  S n2 = length(u2);
  std::vector<S> pl;
  for (std::size_t i = 0; i < u1.size(); ++i)
    for (std::size_t j = i + 1; j < u1.size(); ++j) {
      S c = u1[i] * u2[j] - u1[j] * u2[i];
      if (!T::is_zero(c)) pl.push_back(c);
    }
  S g = T::hypot(ctx, pl);
  std::size_t n = u1.size();
  auto e1 = detail::outer<S>(u1, u1, T::inverse(n1));
  auto e2 = detail::outer<S>(u2, u2, T::inverse(n2));
  auto a = detail::outer<S>(u2, u1, T::one());
  auto b = detail::outer<S>(u1, u2, T::one());
  S gi = T::inverse(g);
  LineFrame<S> fr;
  fr.axis = detail::in_context<S>(e1, ctx);
  fr.proj = detail::in_context<S>(detail::combine<S>(n, false, {{T::one(), &e1}, {T::one(), &e2}}), ctx);
  fr.turn = detail::in_context<S>(detail::combine<S>(n, false, {{gi, &a}, {-gi, &b}}), ctx);
  return fr;
}

/// I + (alpha - 1) proj + beta turn: the rotation (alpha -beta; beta alpha) of the line,
/// identity on its orthocomplement. Requires alpha^2 + beta^2 = 1.
template <StarField S>
OrthogonalMap<S> frame_rotation(const LineFrame<S>& fr, const S& alpha, const S& beta) {
  using T = scalar_traits<S>;
  detail::require_commutative<S>("rotation");
  if (!(alpha * alpha + beta * beta == T::one()))
    throw DomainError("rotation parameters must satisfy alpha^2 + beta^2 = 1");
  return OrthogonalMap<S>(
      detail::combine<S>(fr.proj.size(), true, {{alpha - T::one(), &fr.proj}, {beta, &fr.turn}}));
}

/// The reflection (alpha beta; beta -alpha) in the basis (b1, turn b1), b1 spanning
/// the axis point; identity on the orthocomplement.
template <StarField S>
OrthogonalMap<S> frame_reflection(const LineFrame<S>& fr, const S& alpha, const S& beta) {
  using T = scalar_traits<S>;
  if (!(alpha * alpha + beta * beta == T::one()))
    throw DomainError("reflection parameters must satisfy alpha^2 + beta^2 = 1");
  std::size_t n = fr.proj.size();
  auto ja = detail::product<S>(fr.turn, fr.axis);
  auto aj = detail::product<S>(fr.axis, fr.turn);
  S two = T::from_rational(2);
  return OrthogonalMap<S>(detail::combine<S>(n, true,
                                             {{-T::one() - alpha, &fr.proj},
                                              {two * alpha, &fr.axis},
                                              {beta, &ja},
                                              {-beta, &aj}}));
}

/// The rotation of the frame's line taking p to q: (alpha, beta) is
/// (<p, q>, <turn p, q>) scaled to unit length by hypot, which may extend ctx.
template <StarField S>
Rotation<S> rotation_between(const LineFrame<S>& fr, const ProjectivePoint<S>& p, const ProjectivePoint<S>& q,
                             typename scalar_traits<S>::context& ctx) {
  using T = scalar_traits<S>;
  detail::require_commutative<S>("rotation");
  for (const auto* x : {&p, &q}) {
    for (const auto& c : x->rep()) T::absorb(ctx, c);
    if (!(detail::times(fr.proj, x->rep()) == x->rep()))
      throw DomainError("point " + x->to_string() + " is not on the line");
  }
  S terms[] = {inner(p.rep(), q.rep()), inner(detail::times(fr.turn, p.rep()), q.rep())};
  S gamma = T::hypot(ctx, terms);
  S inv = T::inverse(gamma);
  S alpha = T::in_context(terms[0] * inv, ctx), beta = T::in_context(terms[1] * inv, ctx);
  return {frame_rotation(fr, alpha, beta), alpha, beta};
}

/// U rotating the line l so that P(U)(e) = f and fixing l-perp pointwise.
template <StarField S>
Rotation<S> line_rotation_witness(const LineHandle<S>& l, const ProjectivePoint<S>& e,
                                  const ProjectivePoint<S>& f, typename scalar_traits<S>::context& ctx) {
  detail::require_commutative<S>("line_rotation");
  if (!l.contains(e)) throw DomainError("point " + e.to_string() + " is not on the line");
  if (!l.contains(f)) throw DomainError("point " + f.to_string() + " is not on the line");
  LineFrame<S> fr = line_frame(l, ctx);
  Rotation<S> r = rotation_between(fr, e, f, ctx);
  if (!(r.alpha * r.alpha + r.beta * r.beta == scalar_traits<S>::one()))
    throw Error("line_rotation: alpha^2 + beta^2 != 1");
  if (!verify_orthogonal(r.map)) throw Error("line_rotation: result is not orthogonal");
  if (!(apply_point(r.map, e) == f)) throw Error("line_rotation: P(U)(e) != f");
  if (!fixes_pointwise(r.map, orthocomplement(l.subspace))) throw Error("line_rotation: l-perp not fixed");
  return r;
}

template <StarField S>
OrthogonalMap<S> line_rotation(const LineHandle<S>& l, const ProjectivePoint<S>& e, const ProjectivePoint<S>& f,
                               typename scalar_traits<S>::context& ctx) {
  return line_rotation_witness(l, e, f, ctx).map;
}

template <StarField S>
OrthogonalMap<S> line_rotation(const LineHandle<S>& l, const ProjectivePoint<S>& e, const ProjectivePoint<S>& f) {
  auto ctx = scalar_traits<S>::make_context();
  return line_rotation(l, e, f, ctx);
}

/// U with P(U)(e) = f and U(l) = m: a transporter from l to m followed by a
/// rotation inside m. Over the quaternions the second step is the transporter
/// between the two points instead, which also preserves m.
template <StarField S>
OrthogonalMap<S> flag_transport(const ProjectivePoint<S>& e, const LineHandle<S>& l, const ProjectivePoint<S>& f,
                                const LineHandle<S>& m, typename scalar_traits<S>::context& ctx) {
  if (!l.contains(e)) throw DomainError("point " + e.to_string() + " is not on the first line");
  if (!m.contains(f)) throw DomainError("point " + f.to_string() + " is not on the second line");
  OrthogonalMap<S> t = transporter(l.subspace, m.subspace, ctx);
  ProjectivePoint<S> e2 = apply_point(t, e);
  OrthogonalMap<S> r = OrthogonalMap<S>::identity(e.dimension());
  if constexpr (scalar_traits<S>::commutative) {
    r = line_rotation(m, e2, f, ctx);
  } else {
    std::size_t n = e.dimension();
    r = transporter(Subspace<S>::span(std::vector{e2.rep()}, n), Subspace<S>::span(std::vector{f.rep()}, n), ctx);
  }
  OrthogonalMap<S> u = r * t;
  if (!verify_orthogonal(u)) throw Error("flag_transport: result is not orthogonal");
  if (!(apply_point(u, e) == f)) throw Error("flag_transport: P(U)(e) != f");
  if (!(apply_subspace(u, l.subspace) == m.subspace)) throw Error("flag_transport: U(l) != m");
  return u;
}

template <StarField S>
OrthogonalMap<S> flag_transport(const ProjectivePoint<S>& e, const LineHandle<S>& l, const ProjectivePoint<S>& f,
                                const LineHandle<S>& m) {
  auto ctx = scalar_traits<S>::make_context();
  return flag_transport(e, l, f, m, ctx);
}

/// Checks on the rotation group of a line: the sampled rotations (alpha, beta) in a
/// fixed frame commute pairwise, fix l-perp, and any two sampled points are joined by
/// a rotation of the same group. Controls: the swap and reflections of the form
/// (alpha beta; beta -alpha) with alpha, beta != 0 fail to commute with rotations.
template <StarField S>
Report check_so2_abelian(const LineHandle<S>& l, const std::vector<std::pair<S, S>>& samples,
                         typename scalar_traits<S>::context& ctx) {
  using T = scalar_traits<S>;
  detail::require_commutative<S>("check_so2_abelian");
  Report rep;
  rep.command = "so2";
  LineFrame<S> fr = line_frame(l, ctx);
  Subspace<S> comp = orthocomplement(l.subspace);

  std::vector<OrthogonalMap<S>> rots;
  bool unit = true, orth = true, fixed = true;
  for (const auto& [a, b] : samples) {
    unit = unit && (a * a + b * b == T::one());
    if (!unit) break;
    rots.push_back(frame_rotation(fr, a, b));
    orth = orth && verify_orthogonal(rots.back());
    fixed = fixed && fixes_pointwise(rots.back(), comp);
  }
  std::string count = std::to_string(samples.size()) + " rotations";
  rep.add("unit parameters", unit, "alpha^2 + beta^2 = 1 for " + count);
  if (!unit) return rep;
  rep.add("orthogonal", orth, count + " pass verify_orthogonal");
  rep.add("complement fixed", fixed, count + " fix l-perp pointwise");

  std::size_t pairs = 0, commuting = 0;
  for (std::size_t i = 0; i < rots.size(); ++i)
    for (std::size_t j = i + 1; j < rots.size(); ++j) {
      ++pairs;
      if (rots[i] * rots[j] == rots[j] * rots[i]) ++commuting;
    }
  rep.add("commute", commuting == pairs,
          std::to_string(commuting) + "/" + std::to_string(pairs) + " pairs satisfy UV = VU");

  // Sampled points: the images of l.e under the sampled rotations.
  std::vector<ProjectivePoint<S>> pts{l.e};
  for (const auto& r : rots) pts.push_back(apply_point(r, l.e));
  std::size_t links = 0, linked = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[i + 1];
    ++links;
    Rotation<S> r = rotation_between(fr, p, q, ctx);
    // the link must lie in the sampled group: it commutes with the rotation that produced q
    bool ok = apply_point(r.map, p) == q && r.map * rots[i] == rots[i] * r.map;
    if (ok) ++linked;
  }
  rep.add("transitive", linked == links,
          std::to_string(linked) + "/" + std::to_string(links) +
              " consecutive point pairs joined by a rotation of the same group");

  bool swap_ok = true;
  OrthogonalMap<S> swap = frame_reflection(fr, T::zero(), T::one());
  std::size_t generic = 0, noncommuting = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [a, b] = samples[k];
    if (T::is_zero(a) || T::is_zero(b)) continue;
    ++generic;
    if (swap * rots[k] == rots[k] * swap) swap_ok = false;
    OrthogonalMap<S> refl = frame_reflection(fr, a, b);
    if (!(refl * rots[k] == rots[k] * refl)) ++noncommuting;
  }
  rep.add("swap control", swap_ok && generic > 0,
          "swap (0 1; 1 0) fails to commute with " + std::to_string(generic) + " generic rotations");
  rep.add("reflection control", noncommuting == generic && generic > 0,
          std::to_string(noncommuting) + "/" + std::to_string(generic) +
              " reflections (alpha beta; beta -alpha) fail to commute with the rotation (alpha -beta; beta alpha)");

  if (!rots.empty()) {
    rep.witnesses.push_back(Json{{"rotation", rots.front().to_string()},
                                 {"alpha", T::to_string(samples.front().first)},
                                 {"beta", T::to_string(samples.front().second)}});
  }
  return rep;
}

}  // namespace hos
