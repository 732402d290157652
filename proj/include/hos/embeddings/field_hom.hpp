#pragma once

// Field homomorphisms between towers, stored by generator images, and their
// extension along quadratic adjunctions.

#include <span>
#include <string>
#include <vector>

#include "hos/fields/io.hpp"
#include "hos/fields/merge.hpp"

namespace hos {

/// h: source -> target with h(r_i) = images[i]. Construction checks
/// h(r_i)^2 = h(d_i) for every generator, which makes h a well-defined ring map.
class FieldHom {
 public:
  FieldHom(Tower source, Tower target, std::vector<FieldElement> images) : map_{std::move(source), std::move(target), {}} {
    if (images.size() != map_.source.depth())
      throw DomainError("expected " + std::to_string(map_.source.depth()) + " generator images");
    for (auto& g : images) map_.images.push_back(g.lift(map_.target));
    for (std::size_t i = 0; i < map_.images.size(); ++i) {
      TowerMap partial{map_.source.prefix(i), map_.target,
                       std::vector<FieldElement>(map_.images.begin(), map_.images.begin() + i)};
      FieldElement hd = hos::apply(partial, map_.source.discriminant(i));
      const FieldElement& g = map_.images[i];
      if (!(g * g == hd))
        throw DomainError("image of r" + std::to_string(i + 1) + " does not square to the image of its discriminant");
    }
  }

  /// The inclusion of a prefix tower.
  static FieldHom inclusion(const Tower& source, const Tower& target) {
    TowerMap m = hos::inclusion(source, target);
    return FieldHom(m.source, m.target, m.images);
  }

  const Tower& source() const { return map_.source; }
  const Tower& target() const { return map_.target; }
  const std::vector<FieldElement>& images() const { return map_.images; }
  const TowerMap& map() const { return map_; }

  FieldElement operator()(const FieldElement& x) const { return hos::apply(map_, x); }

 private:
  TowerMap map_;
};

inline FieldElement apply_hom(const FieldHom& h, const FieldElement& x) { return h(x); }

/// Extends h from G = h.source() to G(alpha), where `extended` is G with one more
/// generator alpha, alpha^2 = s. beta must satisfy beta^2 = h(s); it may live in an
/// extension of h.target().
inline FieldHom extend_hom(const FieldHom& h, const Tower& extended, const FieldElement& beta) {
  std::size_t k = h.source().depth();
  if (extended.depth() != k + 1 || !(extended.prefix(k) == h.source()))
    throw DomainError("extend_hom: tower is not a one-step extension of the source");
  const FieldElement& s = extended.discriminant(k);
  if (is_square(s)) throw DomainError("extend_hom: " + s.to_string() + " is a square in the source");
  Tower target = detail::common_tower(h.target(), beta.tower());
  if (!(beta * beta == h(s)))
    throw DomainError("extend_hom: (" + beta.to_string() + ")^2 != h(" + s.to_string() + ")");
  std::vector<FieldElement> images = h.images();
  images.push_back(beta);
  return FieldHom(extended, target, std::move(images));
}

/// Adjoins sqrt(s) to the source and extends h by alpha -> beta.
inline FieldHom extend_hom(const FieldHom& h, const FieldElement& s, const FieldElement& beta) {
  if (!s.tower().is_prefix_of(h.source())) throw TowerMismatch();
  if (is_square(s.lift(h.source()))) throw DomainError("extend_hom: " + s.to_string() + " is a square in the source");
  return extend_hom(h, adjoin(h.source(), s), beta);
}

/// {"source": tower, "target": tower, "images": [element, ...]}.
inline Json hom_to_json(const FieldHom& h) {
  Json images = Json::array();
  for (const auto& g : h.images()) images.push_back(element_to_json(g));
  return Json{{"source", tower_to_json(h.source(), true)},
              {"target", tower_to_json(h.target(), true)},
              {"images", images}};
}

inline FieldHom hom_from_json(const Json& j, std::size_t depth_limit = kDefaultDepthLimit) {
  return detail::read_json("hom", [&] {
    Tower source = tower_from_json(j.at("source"), depth_limit);
    Tower target = tower_from_json(j.at("target"), depth_limit);
    std::vector<FieldElement> images;
    for (const auto& g : j.at("images")) images.push_back(element_from_json(g, target));
    return FieldHom(source, target, std::move(images));
  });
}

}  // namespace hos
