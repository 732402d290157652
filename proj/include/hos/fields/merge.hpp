#pragma once

// Generator-image maps between towers and tower merging.

#include <span>
#include <vector>

#include "hos/fields/square.hpp"

namespace hos {

/// A ring map source -> target determined by the images of the generators.
/// Validity (image_i^2 = map(d_i)) is checked by FieldHom, not here.
struct TowerMap {
  Tower source;
  Tower target;
  std::vector<FieldElement> images;
};

namespace detail {

inline FieldElement substitute(std::span<const Rational> c, std::size_t level,
                               std::span<const FieldElement> images, const Tower& target) {
  if (level == 0) return FieldElement::rational(c[0], target);
  std::size_t h = c.size() / 2;
  FieldElement lo = substitute(c.first(h), level - 1, images, target);
  if (all_zero(c.subspan(h))) return lo;
  return lo + substitute(c.subspan(h), level - 1, images, target) * images[level - 1];
}

}  // namespace detail

/// Evaluates x (an element of a prefix of map.source) by substituting generator images.
inline FieldElement apply(const TowerMap& map, const FieldElement& x) {
  if (!x.tower().is_prefix_of(map.source)) throw TowerMismatch();
  return detail::substitute(x.coeffs(), x.tower().depth(), map.images, map.target)
      .lift(map.target);
}

/// Inclusion of a prefix tower into an extension.
inline TowerMap inclusion(const Tower& source, const Tower& target) {
  if (!source.is_prefix_of(target)) throw TowerMismatch();
  TowerMap m{source, target, {}};
  for (std::size_t i = 0; i < source.depth(); ++i)
    m.images.push_back(FieldElement::generator(target, i));
  return m;
}

struct MergeResult {
  Tower tower;
  TowerMap from_first;
  TowerMap from_second;
};

/// A tower containing both inputs: `first` followed by those generators of
/// `second` that are not already present. Generators found to be squares are sent
/// to their nonnegative roots, so both lifts respect the real embedding.
inline MergeResult merge_towers(const Tower& first, const Tower& second) {
  Tower merged = first;
  TowerMap partial{second.prefix(0), merged, {}};
  for (std::size_t i = 0; i < second.depth(); ++i) {
    partial.source = second.prefix(i);
    partial.target = merged;
    FieldElement d = apply(partial, second.discriminant(i));
    if (auto r = is_square(d)) {
      partial.images.push_back(*r);
      continue;
    }
    std::optional<Provenance> prov;
    if (const Provenance* p = second.provenance(i)) {
      Provenance mapped;
      for (const auto& term : p->terms) mapped.terms.push_back(apply(partial, term));
      mapped.scale = p->scale;
      prov = std::move(mapped);
    }
    merged = adjoin_unchecked(merged, d, std::move(prov));
    partial.images.push_back(FieldElement::generator(merged, merged.depth() - 1));
  }
  for (auto& g : partial.images) g = g.lift(merged);
  partial.source = second;
  partial.target = merged;
  return {merged, inclusion(first, merged), std::move(partial)};
}

}  // namespace hos
