#pragma once

// Embedding finitely generated Hilbert-field fragments (towers whose generators
// all come from hypot) into Pythagorean targets, and the induced maps of
// projective spaces.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hos/embeddings/field_hom.hpp"
#include "hos/orthosets/projective.hpp"
#include "hos/report.hpp"
#include "hos/star/no_sqrt.hpp"

namespace hos {

/// nu: fragment -> target with nu(hypot(a, b)) = hypot(nu(a), nu(b)), built one
/// generator at a time. Generator i was adjoined as gamma_i = scale_i r_i with
/// gamma_i = hypot(terms_i); its image is the nonnegative hypot of the imaged terms,
/// divided by scale_i. The target grows when hypot needs it to.
inline FieldHom embed_hilbert_fragment(const Tower& fragment, const Tower& target) {
  FieldHom h(Tower::rationals(fragment.depth_limit()), target, {});
  for (std::size_t i = 0; i < fragment.depth(); ++i) {
    const Provenance* p = fragment.provenance(i);
    if (!p) throw DomainError("generator r" + std::to_string(i + 1) + " has no hypot provenance");
    std::vector<FieldElement> imgs;
    for (const auto& t : p->terms) imgs.push_back(h(t.lift(fragment.prefix(i))));
    HypotResult g = hypot_all(imgs, h.target());
    FieldElement beta = g.value * FieldElement(Rational(1 / p->scale));
    h = extend_hom(h, fragment.prefix(i + 1), beta);
  }
  return h;
}

/// Re-checks an embedding produced above: every generator image squares to the
/// image of its discriminant and nu(gamma_i) is the target's hypot of the imaged terms.
inline Report check_fragment_embedding(const FieldHom& h) {
  Report rep;
  rep.command = "embed";
  const Tower& src = h.source();
  bool squares = true, hypots = true;
  for (std::size_t i = 0; i < src.depth(); ++i) {
    const FieldElement& g = h.images()[i];
    squares = squares && (g * g == h(src.discriminant(i)));
    if (const Provenance* p = src.provenance(i)) {
      std::vector<FieldElement> imgs;
      for (const auto& t : p->terms) imgs.push_back(h(t.lift(src.prefix(i))));
      HypotResult direct = hypot_all(imgs, h.target());
      FieldElement gamma = FieldElement::generator(src, i) * FieldElement(p->scale);
      hypots = hypots && (h(gamma) == direct.value);
    }
    rep.witnesses.push_back(Json{{"generator", "r" + std::to_string(i + 1)},
                                 {"discriminant", src.discriminant(i).to_string()},
                                 {"image", g.to_string()}});
  }
  std::string gens = std::to_string(src.depth()) + " generators";
  rep.add("generator images", squares, "nu(r_i)^2 = nu(d_i) for " + gens);
  rep.add("hypot commutes", hypots, "nu(hypot(a, b)) = hypot(nu(a), nu(b)) for " + gens);
  return rep;
}

/// The only embedding of a fragment into the rational quaternions is the
/// identity of Q; a generator sqrt(d) would need a quaternion square root of d.
inline std::function<Quaternion(const FieldElement&)> embed_hilbert_fragment_in_quaternions(const Tower& fragment) {
  if (fragment.depth() > 0) {
    Rational d = fragment.discriminant(0).constant();
    Report why = verify_no_quaternion_sqrt(d);
    throw DomainError("no embedding into the rational quaternions: x^2 = " + to_string(d) +
                      " has no quaternion solution (" + (why.passed() ? "certified" : "uncertified") + ")");
  }
  return [](const FieldElement& x) {
    if (!x.is_rational()) throw DomainError("element " + x.to_string() + " is not rational");
    return Quaternion(x.constant());
  };
}

template <StarField S1, StarField S2>
using PointMap = std::function<ProjectivePoint<S2>(const ProjectivePoint<S1>&)>;

/// <(x_1, ..., x_n)> -> <(sigma(x_1), ..., sigma(x_n))>.
template <StarField S1, StarField S2>
PointMap<S1, S2> induced_point_map(std::function<S2(const S1&)> sigma, std::size_t n) {
  return [sigma = std::move(sigma), n](const ProjectivePoint<S1>& p) {
    if (p.dimension() != n) throw DomainError("dimension mismatch");
    std::vector<S2> c;
    for (const auto& x : p.rep()) c.push_back(sigma(x));
    return ProjectivePoint<S2>(Vector<S2>(std::move(c)));
  };
}

inline PointMap<FieldElement, FieldElement> induced_orthoset_embedding(const FieldHom& h, std::size_t n) {
  if (n == 0) throw DomainError("dimension must be positive");
  return induced_point_map<FieldElement, FieldElement>([h](const FieldElement& x) { return h(x); }, n);
}

/// For each pair: distinct points stay distinct, and e perp f iff phi(e) perp phi(f).
/// Failures are reported, never thrown.
template <StarField S1, StarField S2>
Report check_embedding(const PointMap<S1, S2>& phi,
                       const std::vector<std::pair<ProjectivePoint<S1>, ProjectivePoint<S1>>>& pairs) {
  Report rep;
  rep.command = "embed";
  std::size_t distinct = 0, injective = 0, perp_pairs = 0, preserved = 0, image_perp = 0, reflected = 0;
  for (const auto& [e, f] : pairs) {
    auto pe = phi(e), pf = phi(f);
    bool before = perp(e, f), after = perp(pe, pf);
    if (!(e == f)) {
      ++distinct;
      if (!(pe == pf)) {
        ++injective;
      } else if (rep.witnesses.size() < 3) {
        rep.witnesses.push_back(Json{{"failure", "injectivity"}, {"e", e.to_string()}, {"f", f.to_string()},
                                     {"image", pe.to_string()}});
      }
    }
    if (before) {
      ++perp_pairs;
      if (after) ++preserved;
    }
    if (after) {
      ++image_perp;
      if (before) ++reflected;
    }
  }
  auto frac = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  rep.add("injective", injective == distinct, frac(injective, distinct) + " distinct pairs have distinct images");
  rep.add("perp preserved", preserved == perp_pairs, frac(preserved, perp_pairs) + " orthogonal pairs stay orthogonal");
  rep.add("perp reflected", reflected == image_perp,
          frac(reflected, image_perp) + " pairs with orthogonal images were orthogonal");
  return rep;
}

}  // namespace hos
