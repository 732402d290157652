#pragma once

// JSON forms for towers and elements. Rationals are always strings ("p" or "p/q")
// so values round-trip bit-exactly.
//
//   tower:    [["2"], ["4", "2"]]                      discriminant coefficient vectors
//             {"discriminants": [...], "provenance": [...]}  when hypot history is kept
//   element:  {"tower": "<Tower::id()>", "coeffs": ["1", "-1/2", ...]}

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hos/fields/square.hpp"

namespace hos {

using Json = nlohmann::ordered_json;

namespace detail {

/// Runs `read`, reporting structural JSON problems (missing keys, wrong types) as ParseError.
template <class Fn>
auto read_json(const char* what, Fn read) {
  try {
    return read();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what(), 0);
  }
}

}  // namespace detail

inline Json coeffs_to_json(const std::vector<Rational>& c) {
  Json out = Json::array();
  for (const auto& q : c) out.push_back(to_string(q));
  return out;
}

inline std::vector<Rational> coeffs_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficient list must be an array", 0);
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (e.is_string()) {
      c.push_back(parse_rational(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      c.emplace_back(e.get<long>());
    } else {
      throw ParseError("coefficient must be a rational string", 0);
    }
  }
  return c;
}

inline Json tower_to_json(const Tower& t, bool with_provenance = false) {
  Json discs = Json::array();
  for (std::size_t i = 0; i < t.depth(); ++i) discs.push_back(coeffs_to_json(t.discriminant(i).coeffs()));
  if (!with_provenance) return discs;
  Json prov = Json::array();
  for (std::size_t i = 0; i < t.depth(); ++i) {
    const Provenance* p = t.provenance(i);
    if (!p) {
      prov.push_back(nullptr);
      continue;
    }
    Json terms = Json::array();
    for (const auto& term : p->terms) terms.push_back(coeffs_to_json(term.lift(t.prefix(i)).coeffs()));
    prov.push_back(Json{{"terms", terms}, {"scale", to_string(p->scale)}});
  }
  return Json{{"discriminants", discs}, {"provenance", prov}};
}

/// Rebuilds a tower, re-validating every discriminant (positive, non-square).
inline Tower tower_from_json(const Json& j, std::size_t depth_limit = kDefaultDepthLimit) {
  return detail::read_json("tower", [&] {
    const Json* discs = &j;
    const Json* prov = nullptr;
    if (j.is_object()) {
      if (!j.contains("discriminants")) throw ParseError("tower object needs 'discriminants'", 0);
      discs = &j.at("discriminants");
      if (j.contains("provenance")) prov = &j.at("provenance");
    }
    if (!discs->is_array()) throw ParseError("tower must be a list of coefficient vectors", 0);
    Tower t = Tower::rationals(depth_limit);
    for (std::size_t i = 0; i < discs->size(); ++i) {
      FieldElement d(t, coeffs_from_json((*discs)[i]));
      std::optional<Provenance> p;
      if (prov && i < prov->size() && !(*prov)[i].is_null()) {
        const Json& pj = (*prov)[i];
        Provenance pv;
        for (const auto& term : pj.at("terms")) pv.terms.emplace_back(t, coeffs_from_json(term));
        pv.scale = parse_rational(pj.at("scale").get<std::string>());
        FieldElement sum(t);
        for (const auto& term : pv.terms) sum += term * term;
        if (!(sum == d * FieldElement(Rational(pv.scale * pv.scale))))
          throw DomainError("provenance does not match discriminant " + std::to_string(i + 1));
        p = std::move(pv);
      }
      t = adjoin(t, d, std::move(p));
    }
    return t;
  });
}

inline Json element_to_json(const FieldElement& x) {
  return Json{{"tower", x.tower().id()}, {"coeffs", coeffs_to_json(x.coeffs())}};
}

/// Reads an element of `tower` or of one of its prefixes (matched by id).
inline FieldElement element_from_json(const Json& j, const Tower& tower) {
  auto [id, c] = detail::read_json("element", [&] {
    return std::pair(j.at("tower").get<std::string>(), coeffs_from_json(j.at("coeffs")));
  });
  for (std::size_t k = 0; k <= tower.depth(); ++k) {
    Tower p = tower.prefix(k);
    if (p.id() == id) return FieldElement(p, std::move(c)).lift(tower);
  }
  throw TowerMismatch();
}

}  // namespace hos
